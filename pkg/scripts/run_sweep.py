#!/usr/bin/env python3
"""Sweep the catalog, write JSON lines, print a per-statement summary.

    python3 scripts/run_sweep.py --max-order 200 -o sweep.jsonl
"""

import argparse
import sys
import time

from incgraph.verify import resolve_theorem, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=200)
    ap.add_argument("--theorem", action="append", default=[])
    ap.add_argument("-o", "--output", default="sweep.jsonl")
    args = ap.parse_args()

    ids = [resolve_theorem(t) for t in args.theorem] or ["all"]
    t0 = time.time()
    res = sweep(args.max_order, ids)
    res.write(args.output)

    for r in res.results:
        print(f"{r.theorem_id:6s} {r.verdict:4s} {r.instances_tested:5d} tested  {len(r.counterexamples)} counterexamples")
        for c in r.counterexamples:
            print(f"         {c['spec']}: expected {c['expected']}  {c.get('detail', '')}")
    fails = [rec["spec"] for rec in res.records if rec["verdict"] == "fail"]
    print(f"\n{len(res.records)} instances in {time.time() - t0:.1f}s, {len(fails)} with mismatches: {', '.join(fails)}")
    print(f"digest {res.digest}")
    print(f"wrote {args.output}")
    return 0 if res.ok else 3


if __name__ == "__main__":
    sys.exit(main())
