"""Finite groups as explicit Cayley tables.

Each catalog family is realised from its presentation by enumerating
normal-form words (exponent tuples, or permutations for A_n / S_n) and
multiplying them with a closed-form rule.  Element 0 is always the
identity and the remaining elements follow the lexicographic order of
their normal forms, so equal specs give byte-identical tables.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from sympy import factorint, isprime

from .config import get_config
from .errors import (
    DivisibilityConditionFails,
    NoSuchExponent,
    NonPrimeParameter,
    NotASubgroup,
    NotNormal,
    OrderCapExceeded,
    SemanticError,
)

KINDS = (
    "Cyclic",
    "DirectProduct",
    "Dihedral",
    "Quaternion8",
    "Modular8",
    "ModularP3",
    "SemidirectQP",
    "SemidirectP2Q",
    "G5",
    "G6",
    "Heisenberg",
    "Alternating",
    "Symmetric",
)


@dataclass(frozen=True)
class GroupSpec:
    """A catalog group.  ``params`` are the integers listed per kind:

    Cyclic(n), Dihedral(order), ModularP3(p), SemidirectQP(q, p, alpha, t),
    SemidirectP2Q(p, q), G5(p, q, t), G6(p, q), Heisenberg(p),
    Alternating(n), Symmetric(n).  DirectProduct keeps its operands in
    ``factors`` (always flattened).
    """

    kind: str
    params: tuple = ()
    factors: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SemanticError(f"unknown group kind {self.kind!r}")

    # convenience constructors
    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("Cyclic", (n,))

    @classmethod
    def dihedral(cls, order: int) -> "GroupSpec":
        return cls("Dihedral", (order,))

    @classmethod
    def product(cls, *specs: "GroupSpec") -> "GroupSpec":
        flat: list[GroupSpec] = []
        for s in specs:
            flat.extend(s.factors if s.kind == "DirectProduct" else (s,))
        if len(flat) == 1:
            return flat[0]
        return cls("DirectProduct", (), tuple(flat))

    def __str__(self) -> str:
        return render(self)

    def to_json(self):
        if self.kind == "DirectProduct":
            return {"kind": self.kind, "factors": [f.to_json() for f in self.factors]}
        return {"kind": self.kind, "params": list(self.params)}

    @classmethod
    def from_json(cls, obj) -> "GroupSpec":
        if obj["kind"] == "DirectProduct":
            return cls.product(*(cls.from_json(f) for f in obj["factors"]))
        return cls(obj["kind"], tuple(obj["params"]))


def render(spec: GroupSpec) -> str:
    """Inverse of the CLI spec grammar."""
    k, p = spec.kind, spec.params
    if k == "DirectProduct":
        return "x".join(render(f) for f in spec.factors)
    simple = {
        "Cyclic": "Z{}",
        "Dihedral": "D{}",
        "Alternating": "A{}",
        "Symmetric": "S{}",
        "ModularP3": "M{}^3",
        "Heisenberg": "Heis({})",
        "SemidirectQP": "SD({},{},{},{})",
        "SemidirectP2Q": "SDP2Q({},{})",
        "G5": "G5({},{},{})",
        "G6": "G6({},{})",
    }
    if k == "Quaternion8":
        return "Q8"
    if k == "Modular8":
        return "M8"
    return simple[k].format(*p)


def spec_order(spec: GroupSpec) -> int:
    """Group order implied by a spec, without building the table."""
    k, p = spec.kind, spec.params
    if k == "DirectProduct":
        return math.prod(spec_order(f) for f in spec.factors)
    if k in ("Cyclic", "Dihedral"):
        return p[0]
    if k in ("Quaternion8", "Modular8"):
        return 8
    if k in ("ModularP3", "Heisenberg"):
        return p[0] ** 3
    if k == "SemidirectQP":
        q, pp, alpha, _ = p
        return q * pp**alpha
    if k in ("SemidirectP2Q", "G5", "G6"):
        return p[0] ** 2 * p[1]
    if k == "Alternating":
        return max(1, math.factorial(p[0]) // 2)
    if k == "Symmetric":
        return math.factorial(p[0])
    raise SemanticError(f"unknown kind {k}")


# ---------------------------------------------------------------------------
# number theory helpers


def multiplicative_order(i: int, n: int) -> int:
    if math.gcd(i, n) != 1:
        return 0
    k, x = 1, i % n
    while x != 1 % n:
        x = (x * i) % n
        k += 1
    return k


def find_action_exponent(modulus: int, target_order: int) -> int:
    """Smallest i in [2, modulus) whose multiplicative order mod ``modulus``
    is exactly ``target_order``.  Order 1 is refused: it would make the
    semidirect product direct."""
    if target_order <= 1:
        raise NoSuchExponent(f"action of order {target_order} is trivial (direct product)")
    for i in range(2, modulus):
        if multiplicative_order(i, modulus) == target_order:
            return i
    raise NoSuchExponent(f"no residue of multiplicative order {target_order} mod {modulus}")


def _require_prime(name: str, value: int) -> None:
    if not isprime(value):
        raise NonPrimeParameter(f"{name}={value} is not prime")


def _mat_mul(a, b, p):
    return (
        (a[0] * b[0] + a[1] * b[2]) % p,
        (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p,
        (a[2] * b[1] + a[3] * b[3]) % p,
    )


def find_gl2_matrix(p: int, q: int) -> tuple[int, int, int, int]:
    """First matrix (row-major lexicographic) of order exactly q in GL_2(p)."""
    ident = (1, 0, 0, 1)
    for m in itertools.product(range(p), repeat=4):
        if (m[0] * m[3] - m[1] * m[2]) % p == 0:
            continue
        x, k = m, 1
        while x != ident:
            x = _mat_mul(x, m, p)
            k += 1
        if k == q:
            return m
    raise DivisibilityConditionFails(f"GL_2({p}) has no element of order {q}")


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True, eq=False)
class GroupTable:
    op: np.ndarray
    labels: tuple
    spec: Optional[GroupSpec] = None
    identity: int = 0
    inverses: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.inverses is None:
            rows, cols = np.nonzero(self.op == self.identity)
            inv = np.empty(self.order, dtype=self.op.dtype)
            inv[rows] = cols
            object.__setattr__(self, "inverses", inv)
        self.op.setflags(write=False)
        self.inverses.setflags(write=False)

    @property
    def order(self) -> int:
        return self.op.shape[0]

    def __len__(self) -> int:
        return self.order

    def mul(self, x: int, y: int) -> int:
        return int(self.op[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "op": self.op.ravel().tolist(),
            "labels": list(self.labels),
            "spec": self.spec.to_json() if self.spec else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "GroupTable":
        n = obj["order"]
        op = np.asarray(obj["op"], dtype=_dtype(n)).reshape(n, n)
        spec = GroupSpec.from_json(obj["spec"]) if obj.get("spec") else None
        return cls(op=op, labels=tuple(obj["labels"]), spec=spec)


def _dtype(n: int):
    return np.int16 if n < 2**15 else np.int32


def _table_from_words(
    words: Sequence, mul: Callable, label: Callable, spec: GroupSpec
) -> GroupTable:
    words = sorted(words)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    op = np.empty((n, n), dtype=_dtype(n))
    for i, x in enumerate(words):
        op[i] = [index[mul(x, y)] for y in words]
    return GroupTable(op=op, labels=tuple(label(w) for w in words), spec=spec)


def _word(names: str, exps: Iterable[int]) -> str:
    parts = []
    for g, e in zip(names, exps):
        if e == 1:
            parts.append(g)
        elif e:
            parts.append(f"{g}^{e}")
    return "".join(parts) or "e"


def _cyclic(n: int, spec: GroupSpec) -> GroupTable:
    r = np.arange(n)
    op = ((r[:, None] + r[None, :]) % n).astype(_dtype(n))
    labels = tuple(_word("a", (k,)) for k in range(n))
    return GroupTable(op=op, labels=labels, spec=spec)


def _metacyclic(m: int, k: int, i: int, spec: GroupSpec, relation=None) -> GroupTable:
    """<a, b | a^m = 1, b^k = relation, b a b^-1 = a^i> on words a^x b^y.

    ``relation`` is the exponent r with b^k = a^r (0 for split extensions).
    """
    r = relation or 0
    pw = [pow(i, y, m) for y in range(k)]

    def mul(u, v):
        x1, y1 = u
        x2, y2 = v
        x = x1 + pw[y1] * x2
        y = y1 + y2
        if y >= k:
            y -= k
            x += r
        return (x % m, y)

    words = [(x, y) for x in range(m) for y in range(k)]
    return _table_from_words(words, mul, lambda w: _word("ab", w), spec)


def _perm_table(n: int, even_only: bool, spec: GroupSpec) -> GroupTable:
    perms = [
        p
        for p in itertools.permutations(range(n))
        if not even_only or _parity(p) == 0
    ]

    def mul(p, q):  # apply q first, then p
        return tuple(p[q[j]] for j in range(n))

    return _table_from_words(perms, mul, _cycle_label, spec)


def _parity(p) -> int:
    seen, parity = set(), 0
    for s in range(len(p)):
        if s in seen:
            continue
        j, length = s, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _cycle_label(p) -> str:
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, j = [], s
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "e"


def check_spec(spec: GroupSpec) -> None:
    """Raise if a spec's primality or divisibility conditions fail."""
    k, p = spec.kind, spec.params
    if k == "DirectProduct":
        for f in spec.factors:
            check_spec(f)
        return
    if any(not isinstance(v, int) or v < 0 for v in p):
        raise SemanticError(f"{render(spec)}: parameters must be non-negative integers")
    if k == "Cyclic" and p[0] < 1:
        raise SemanticError("Z_n needs n >= 1")
    elif k == "Dihedral":
        if p[0] < 4 or p[0] % 2:
            raise SemanticError(f"D{p[0]}: dihedral order must be even and >= 4")
    elif k == "ModularP3":
        _require_prime("p", p[0])
        if p[0] == 2:
            raise SemanticError("M_{p^3} needs p > 2; the order-8 group is M8")
    elif k == "Heisenberg":
        _require_prime("p", p[0])
    elif k == "SemidirectQP":
        q, pp, alpha, t = p
        _require_prime("q", q)
        _require_prime("p", pp)
        if q == pp:
            raise SemanticError("SD(q,p,...) needs distinct primes")
        if alpha < 1 or t < 1:
            raise DivisibilityConditionFails("SD needs alpha >= 1 and t >= 1")
        if (q - 1) % pp**t:
            raise DivisibilityConditionFails(f"p^t = {pp}^{t} does not divide q-1 = {q - 1}")
        if t > alpha:
            raise DivisibilityConditionFails(f"t={t} exceeds alpha={alpha}: b^(p^alpha) would act nontrivially")
    elif k in ("SemidirectP2Q", "G5"):
        pp, q = p[0], p[1]
        _require_prime("p", pp)
        _require_prime("q", q)
        if (pp - 1) % q:
            raise DivisibilityConditionFails(f"q = {q} does not divide p-1 = {pp - 1}")
        if k == "G5" and not 0 <= p[2] < q:
            raise SemanticError(f"G5 needs 0 <= t < q, got t={p[2]}")
    elif k == "G6":
        _require_prime("p", p[0])
        _require_prime("q", p[1])
        order_gl2 = (p[0] ** 2 - 1) * (p[0] ** 2 - p[0])
        if order_gl2 % p[1]:
            raise DivisibilityConditionFails(
                f"q = {p[1]} does not divide |GL_2({p[0]})| = {order_gl2}"
            )
    elif k == "Alternating" and not 1 <= p[0] <= 5:
        raise SemanticError("A_n supported for n <= 5")
    elif k == "Symmetric" and not 1 <= p[0] <= 4:
        raise SemanticError("S_n supported for n <= 4")


def construct(spec: GroupSpec, order_cap: Optional[int] = None) -> GroupTable:
    """Realise ``spec`` as a validated Cayley table."""
    cap = get_config().order_cap if order_cap is None else order_cap
    check_spec(spec)
    n = spec_order(spec)
    if n > cap:
        raise OrderCapExceeded(f"|{render(spec)}| = {n} exceeds order cap {cap}")
    g = _build(spec, cap)
    bad = validate(g)
    if bad:  # pragma: no cover - construction bug
        raise AssertionError(f"{render(spec)} failed validation: {bad[:3]}")
    return g


def _build(spec: GroupSpec, cap: int) -> GroupTable:
    k, p = spec.kind, spec.params
    if k == "Cyclic":
        return _cyclic(p[0], spec)
    if k == "DirectProduct":
        g = _build(spec.factors[0], cap)
        for f in spec.factors[1:]:
            g = direct_product(g, _build(f, cap), order_cap=cap)
        return GroupTable(op=g.op, labels=g.labels, spec=spec)
    if k == "Dihedral":
        return _metacyclic(p[0] // 2, 2, -1 % (p[0] // 2), spec)
    if k == "Modular8":
        # printed presentation a^4 = b^2 = 1, ab = ba^-1
        return _metacyclic(4, 2, 3, spec)
    if k == "Quaternion8":
        # a^4 = 1, b^2 = a^2, b a b^-1 = a^-1
        return _metacyclic(4, 2, 3, spec, relation=2)
    if k == "ModularP3":
        pp = p[0]
        return _metacyclic(pp * pp, pp, 1 + pp, spec)
    if k == "SemidirectQP":
        q, pp, alpha, t = p
        i = find_action_exponent(q, pp**t)
        return _metacyclic(q, pp**alpha, i, spec)
    if k == "SemidirectP2Q":
        pp, q = p
        i = find_action_exponent(pp * pp, q)
        return _metacyclic(pp * pp, q, i, spec)
    if k == "G5":
        pp, q, t = p
        i = find_action_exponent(pp, q)
        return _diagonal_action(pp, q, i, pow(i, t, pp), spec)
    if k == "G6":
        pp, q = p
        return _matrix_action(pp, q, find_gl2_matrix(pp, q), spec)
    if k == "Heisenberg":
        return _heisenberg(p[0], spec)
    if k == "Alternating":
        return _perm_table(p[0], True, spec)
    if k == "Symmetric":
        return _perm_table(p[0], False, spec)
    raise SemanticError(f"unknown kind {k}")  # pragma: no cover


def _diagonal_action(pp, q, i, j, spec):
    """<a, b, c | a^p = b^p = c^q = 1, ab = ba, c a c^-1 = a^i, c b c^-1 = b^j>."""
    pi = [pow(i, z, pp) for z in range(q)]
    pj = [pow(j, z, pp) for z in range(q)]

    def mul(u, v):
        x1, y1, z1 = u
        x2, y2, z2 = v
        return ((x1 + pi[z1] * x2) % pp, (y1 + pj[z1] * y2) % pp, (z1 + z2) % q)

    words = list(itertools.product(range(pp), range(pp), range(q)))
    return _table_from_words(words, mul, lambda w: _word("abc", w), spec)


def _matrix_action(pp, q, m, spec):
    """(Z_p x Z_p) x| Z_q where c acts on column vectors (x, y) by ``m``."""
    powers = [(1, 0, 0, 1)]
    for _ in range(q - 1):
        powers.append(_mat_mul(powers[-1], m, pp))

    def mul(u, v):
        x1, y1, z1 = u
        x2, y2, z2 = v
        a = powers[z1]
        return (
            (x1 + a[0] * x2 + a[1] * y2) % pp,
            (y1 + a[2] * x2 + a[3] * y2) % pp,
            (z1 + z2) % q,
        )

    words = list(itertools.product(range(pp), range(pp), range(q)))
    return _table_from_words(words, mul, lambda w: _word("abc", w), spec)


def _heisenberg(pp, spec):
    # a central, c b c^-1 = ab, so c^z b^y = a^(zy) b^y c^z
    def mul(u, v):
        x1, y1, z1 = u
        x2, y2, z2 = v
        return ((x1 + x2 + z1 * y2) % pp, (y1 + y2) % pp, (z1 + z2) % pp)

    words = list(itertools.product(range(pp), repeat=3))
    return _table_from_words(words, mul, lambda w: _word("abc", w), spec)


# ---------------------------------------------------------------------------
# operations on tables


def direct_product(g: GroupTable, h: GroupTable, order_cap: Optional[int] = None) -> GroupTable:
    cap = get_config().order_cap if order_cap is None else order_cap
    n1, n2 = g.order, h.order
    if n1 * n2 > cap:
        raise OrderCapExceeded(f"|G x H| = {n1 * n2} exceeds order cap {cap}")
    a = g.op.astype(np.int64)
    b = h.op.astype(np.int64)
    # element (i, j) has index i * n2 + j
    op = a[:, None, :, None] * n2 + b[None, :, None, :]
    op = op.reshape(n1 * n2, n1 * n2).astype(_dtype(n1 * n2))
    labels = tuple(f"({x},{y})" for x in g.labels for y in h.labels)
    spec = None
    if g.spec is not None and h.spec is not None:
        spec = GroupSpec.product(g.spec, h.spec)
    return GroupTable(op=op, labels=labels, spec=spec)


def element_order(g: GroupTable, x: int) -> int:
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k


def element_orders(g: GroupTable) -> list[int]:
    return [element_order(g, x) for x in range(g.order)]


def members_of(h) -> list[int]:
    """Element indices of a subgroup given as a Subgroup, bitmask or iterable."""
    mask = getattr(h, "members", h)
    if isinstance(mask, (int, np.integer)):
        mask = int(mask)
        out, i = [], 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out
    return sorted(int(x) for x in mask)


def is_subgroup(g: GroupTable, elems: Sequence[int]) -> bool:
    s = set(elems)
    if g.identity not in s:
        return False
    idx = np.fromiter(s, dtype=np.int64)
    prods = g.op[np.ix_(idx, idx)]
    return set(np.unique(prods).tolist()) <= s


def is_normal(g: GroupTable, h) -> bool:
    elems = members_of(h)
    if not is_subgroup(g, elems):
        raise NotASubgroup("argument is not closed under the group operation")
    s = set(elems)
    idx = np.asarray(elems, dtype=np.int64)
    for x in range(g.order):
        conj = g.op[g.op[x, idx], g.inverses[x]]
        if not set(conj.tolist()) <= s:
            return False
    return True


def coset_map(g: GroupTable, n) -> tuple[GroupTable, np.ndarray]:
    """Quotient table plus the map element -> coset index."""
    elems = members_of(n)
    if not is_normal(g, elems):
        raise NotNormal("quotient needs a normal subgroup")
    idx = np.asarray(elems, dtype=np.int64)
    which = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if which[x] >= 0:
            continue
        which[g.op[x, idx]] = len(reps)
        reps.append(x)
    m = len(reps)
    r = np.asarray(reps)
    op = which[g.op[np.ix_(r, r)]].astype(_dtype(m))
    labels = tuple(g.labels[x] for x in reps)
    return GroupTable(op=op, labels=labels, spec=None), which


def quotient(g: GroupTable, n) -> GroupTable:
    return coset_map(g, n)[0]


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: tuple = ()

    def __str__(self):
        return f"{self.kind} at {self.detail}" if self.detail else self.kind


def validate(g: GroupTable, block: int = 16) -> list[Violation]:
    """All violated table invariants (empty list when the table is a group)."""
    op = np.asarray(g.op)
    n = op.shape[0] if op.ndim == 2 else 0
    if op.ndim != 2 or op.shape[1] != n or n == 0:
        return [Violation("ShapeViolation", tuple(op.shape))]
    if op.min() < 0 or op.max() >= n:
        return [Violation("RangeViolation")]
    out = []
    e = g.identity
    r = np.arange(n)
    bad = np.flatnonzero((op[e] != r) | (op[:, e] != r))
    if bad.size:
        out.append(Violation("IdentityLawViolation", (int(bad[0]),)))
    inv = np.asarray(g.inverses)
    bad = np.flatnonzero((inv < 0) | (inv >= n))
    if bad.size or np.any(op[r, np.clip(inv, 0, n - 1)] != e):
        x = int(bad[0]) if bad.size else int(np.flatnonzero(op[r, np.clip(inv, 0, n - 1)] != e)[0])
        out.append(Violation("InverseViolation", (x,)))
    o = op.astype(np.int64)
    for start in range(0, n, block):
        xs = slice(start, min(n, start + block))
        left = op[o[xs]]  # (xy)z
        right = op[xs][:, o]  # x(yz)
        diff = np.argwhere(left != right)
        if diff.size:
            x, y, z = diff[0]
            out.append(Violation("AssociativityViolation", (int(x) + start, int(y), int(z))))
            break
    return out


def center(g: GroupTable) -> list[int]:
    return [x for x in range(g.order) if np.array_equal(g.op[x], g.op[:, x])]


def prime_factors(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in factorint(n).items()}
