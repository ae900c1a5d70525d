"""Command line entry point: ``incgraph analyze|export|sweep|isocheck|catalog``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import IncgraphError, ParseError, ResourceCapError, SpecError, UnclassifiedSpec
from .group_core import GroupSpec, check_spec, render, spec_order

EXIT_OK, EXIT_ERROR, EXIT_SPEC, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3, 4


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(f"{msg} in {self.text!r}", self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def args(self, k: int) -> tuple:
        vals = [self.integer()]
        for _ in range(k - 1):
            self.expect(",")
            vals.append(self.integer())
        self.expect(")")
        return tuple(vals)

    def term(self) -> GroupSpec:
        self.skip_ws()
        start = self.pos
        if self.accept("SDP2Q("):
            spec = GroupSpec("SemidirectP2Q", self.args(2))
        elif self.accept("SD("):
            spec = GroupSpec("SemidirectQP", self.args(4))
        elif self.accept("Heis("):
            spec = GroupSpec("Heisenberg", self.args(1))
        elif self.accept("G5("):
            spec = GroupSpec("G5", self.args(3))
        elif self.accept("G6("):
            spec = GroupSpec("G6", self.args(2))
        elif self.accept("Q8"):
            spec = GroupSpec("Quaternion8")
        elif self.accept("M"):
            n = self.integer()
            if self.accept("^3"):
                spec = GroupSpec("ModularP3", (n,))
            elif n == 8:
                spec = GroupSpec("Modular8")
            else:
                self.pos = start
                self.error("expected M8 or M<p>^3")
        elif self.accept("Z"):
            spec = GroupSpec.cyclic(self.integer())
        elif self.accept("D"):
            spec = GroupSpec.dihedral(self.integer())
        elif self.accept("A"):
            spec = GroupSpec("Alternating", (self.integer(),))
        elif self.accept("S"):
            spec = GroupSpec("Symmetric", (self.integer(),))
        else:
            self.error("expected a group term")
        check_spec(spec)
        return spec

    def spec(self) -> GroupSpec:
        terms = [self.term()]
        while self.accept("x"):
            terms.append(self.term())
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return GroupSpec.product(*terms)


def parse_spec(text: str) -> GroupSpec:
    """Parse the CLI group grammar, e.g. ``Z4xZ2``, ``SD(7,3,1,1)``, ``M5^3``."""
    return _Parser(text).spec()


def _fmt(v) -> str:
    if v is None:
        return "inf"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def cmd_analyze(spec_text: str, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    from .catalog import analyse
    from .verify import expected_profile

    spec = parse_spec(spec_text)
    a = analyse(spec)
    report = a.report
    try:
        prof = expected_profile(spec)
        mismatches = prof.mismatches(report)
        expected = prof.to_json()
    except UnclassifiedSpec as exc:
        prof, mismatches, expected = None, [], {"unclassified": str(exc)}
    if as_json:
        doc = {
            "spec": render(spec),
            "order": a.group.order,
            "subgroups": len(a.lattice.subgroups),
            "height": a.lattice.height,
            "report": report.to_json(),
            "expected": expected,
            "mismatches": mismatches,
        }
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        rj = report.to_json()
        lines = [
            f"group        {render(spec)}  (order {a.group.order}, {len(a.lattice.subgroups)} subgroups, lattice height {a.lattice.height})",
            f"graph        {rj['n_vertices']} vertices, {rj['n_edges']} edges",
            f"shape        {rj['shape']}",
            f"components   {rj['n_components']}",
            f"diameter     {_fmt(rj['diameter'])}",
            f"girth        {_fmt(rj['girth'])}",
            f"omega / chi  {rj['clique_number']} / {rj['chromatic_number']}",
            f"bipartite    {_fmt(rj['bipartite'])}",
            f"claw-free    {_fmt(rj['claw_free'])}",
            f"planar       {_fmt(rj['planar'])}",
            f"degrees      {rj['degree_sequence']}",
        ]
        if prof is None:
            lines.append("predictions  none (unclassified)")
        else:
            lines.append(f"predictions  {len(prof.predictions)} checked, {len(mismatches)} mismatched")
            for m in mismatches:
                lines.append(f"  MISMATCH {m['field']}: expected {m['value']} ({m['theorem']}), observed {m['observed']}")
            for note in prof.notes:
                lines.append(f"  note: {note}")
        out.write("\n".join(lines) + "\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_export(spec_text: str, fmt: str, path: Optional[str] = None, out=None) -> int:
    out = out or sys.stdout
    from .catalog import analyse

    spec = parse_spec(spec_text)
    g = analyse(spec).graph
    text = g.to_dot(f"I({render(spec)})") if fmt == "dot" else json.dumps(g.to_json(), sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_sweep(max_order: int, theorems, path: Optional[str] = None, out=None) -> int:
    out = out or sys.stdout
    from .verify import resolve_theorem, sweep

    ids = list(theorems) or ["all"]
    ids = ["all"] if "all" in ids else [resolve_theorem(t) for t in ids]
    res = sweep(max_order, ids)
    if path:
        res.write(path)
    for r in res.results:
        out.write(f"{r.theorem_id:6s} {r.verdict.upper():4s} {r.instances_tested:6d} instances  {len(r.counterexamples)} counterexamples\n")
    failed = sum(1 for rec in res.records if rec["verdict"] == "fail")
    out.write(f"{len(res.records)} catalog instances, {failed} with prediction mismatches, digest {res.digest or '-'}\n")
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_isocheck(s1: str, s2: str, out=None) -> int:
    out = out or sys.stdout
    from .catalog import analyse
    from .graph_iso import is_isomorphic

    a1, a2 = analyse(parse_spec(s1)), analyse(parse_spec(s2))
    ok, phi = is_isomorphic(a1.graph, a2.graph)
    if not ok:
        out.write(f"I({render(a1.spec)}) and I({render(a2.spec)}) are not isomorphic\n")
        return EXIT_OK
    out.write(f"I({render(a1.spec)}) and I({render(a2.spec)}) are isomorphic\n")
    for v, w in enumerate(phi):
        out.write(f"  {a1.graph.vertex_labels[v]} -> {a2.graph.vertex_labels[w]}\n")
    return EXIT_OK


def cmd_catalog(max_order: int, out=None) -> int:
    out = out or sys.stdout
    from .catalog import catalog

    for s in catalog(max_order):
        out.write(f"{spec_order(s)}\t{render(s)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="incgraph",
        description="Inclusion graphs of subgroups of finite groups.",
        epilog="Spec grammar: Zn, Dn (n = group order, so D8 has order 8), Q8, M8, Mp^3, An, Sn, "
        "SD(q,p,a,t), SDP2Q(p,q), G5(p,q,t), G6(p,q), Heis(p), joined by 'x' for direct products. "
        "INCL_ORDER_CAP overrides the order cap (default 400).",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("analyze", help="invariants of I(G) and the predicted values")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p = sub.add_parser("export", help="write I(G) as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output")
    p = sub.add_parser("sweep", help="check the classification statements over the catalog")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--theorem", action="append", default=[])
    p.add_argument("-o", "--output")
    p = sub.add_parser("isocheck", help="are the two inclusion graphs isomorphic")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p = sub.add_parser("catalog", help="list the catalog")
    p.add_argument("--max-order", type=int, required=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "analyze":
            return cmd_analyze(args.spec, args.json)
        if args.cmd == "export":
            return cmd_export(args.spec, args.format, args.output)
        if args.cmd == "sweep":
            return cmd_sweep(args.max_order, args.theorem, args.output)
        if args.cmd == "isocheck":
            return cmd_isocheck(args.spec1, args.spec2)
        return cmd_catalog(args.max_order)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_SPEC
    except IncgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
