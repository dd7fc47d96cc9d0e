"""For each starting graph, split it at a separating set and look for
paths between the two sides that avoid a W_k-subdivision.

    python scripts/separation_sweep.py -k 7 --sep 0,1,3,5 graphs/*.txt

A graph whose run produces no exceptions shows that, in that case, the set
may be assumed to separate the full graph.
"""

import argparse
import sys

from wheelshp.connectivity import components_minus
from wheelshp.generation import exception_generator
from wheelshp.io import read_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("graphs", nargs="+")
    ap.add_argument("-k", type=int, required=True)
    ap.add_argument("--sep", required=True)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--skip-mode", default="dedup", choices=["dedup", "literal"])
    args = ap.parse_args()
    sep = [int(t) for t in args.sep.split(",") if t]

    open_cases = 0
    for path in args.graphs:
        g = read_graph(path)
        comps = components_minus(g, sep)
        if len(comps) != 2:
            print(f"{path}: {len(comps)} components after removing {sep}, skipped")
            continue
        a, b = comps
        result = exception_generator(g, a, b, args.k, skip_mode=args.skip_mode, jobs=args.jobs)
        print(f"{path}: {result.candidates_tested} candidates, {len(result)} exceptions")
        open_cases += bool(len(result))
    print(f"graphs with exceptions: {open_cases}/{len(args.graphs)}")
    return 1 if open_cases else 0


if __name__ == "__main__":
    sys.exit(main())
