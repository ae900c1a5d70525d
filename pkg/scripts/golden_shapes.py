#!/usr/bin/env python3
"""Print the inclusion-graph invariants of a handful of small groups."""

import sys

from incgraph.catalog import analyse
from incgraph.cli import parse_spec
from incgraph.invariants import INF

DEFAULT = [
    "Z16", "Z12", "Z30", "Q8", "M8", "Z4xZ2", "Z9xZ3", "M3^3", "A4", "S3",
    "Z3xZ3", "Z3xZ3xZ3", "Heis(3)", "Z36", "Z6xZ6", "Z210", "S4", "A5",
]


def fmt(x):
    return "inf" if x == INF else str(x)


def main(specs):
    print(f"{'group':12s} {'n':>4s} {'m':>5s} {'diam':>4s} {'girth':>5s} {'w=x':>4s} {'planar':>6s}  shape")
    for text in specs:
        a = analyse(parse_spec(text))
        r = a.report
        print(
            f"{text:12s} {r.n_vertices:4d} {r.n_edges:5d} {fmt(r.diameter):>4s} {fmt(r.girth):>5s}"
            f" {r.clique_number:4d} {str(r.planar):>6s}  {r.shape}"
        )


if __name__ == "__main__":
    main(sys.argv[1:] or DEFAULT)
