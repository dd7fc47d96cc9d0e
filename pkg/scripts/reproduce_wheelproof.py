"""Run wheelproof for a range of k and report raw and isomorphism-class counts.

    python scripts/reproduce_wheelproof.py --kmin 4 --kmax 7 [--dot out/]
"""

import argparse
import time
from pathlib import Path

from wheelshp.generation import wheelproof
from wheelshp.io import to_dot
from wheelshp.isomorphism import iso_classes

EXPECTED = {4: (0, 0), 5: (2, 1), 6: (5, 1), 7: (15, 3)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmin", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--dot", type=Path, default=None, help="write class representatives as DOT here")
    args = ap.parse_args()

    print(f"{'k':>2} {'cands':>6} {'not3c':>6} {'exc':>4} {'classes':>7} {'expected':>9} {'secs':>6}")
    for k in range(args.kmin, args.kmax + 1):
        t = time.perf_counter()
        result = wheelproof(k, jobs=args.jobs)
        classes = iso_classes(result.graphs)
        secs = time.perf_counter() - t
        exp = EXPECTED.get(k)
        exp_text = f"{exp[0]}/{exp[1]}" if exp else "-"
        print(f"{k:>2} {result.candidates_tested:>6} {result.skipped_not_3connected:>6} "
              f"{len(result):>4} {len(classes):>7} {exp_text:>9} {secs:>6.2f}")
        if args.dot:
            args.dot.mkdir(parents=True, exist_ok=True)
            for n, cls in enumerate(classes.classes):
                name = f"wheelproof{k}_class{n}"
                (args.dot / f"{name}.dot").write_text(to_dot(cls.representative, name=name))


if __name__ == "__main__":
    main()
