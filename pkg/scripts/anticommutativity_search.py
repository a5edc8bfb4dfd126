#!/usr/bin/env python3
"""Search random instances for a cohomology-level anticommutativity violation.

At the cochain level the graded sign rule is simply false (the standard
square already breaks it), but on cohomology classes no counterexample is
known.  This script samples random instances, compares every generator pair
both ways, and reports the first disagreement it finds, if any.  Agreement
here is evidence, not proof.
"""

import argparse
import sys

from precubical.propcheck import GenConfig, anticommutativity_report, random_precubical
from precubical.rings import Z


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--pairs-per-instance", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    disagreements = 0
    for k in range(args.instances):
        cfg = GenConfig(seed=args.seed + k, factors=3, vertices=2, edges=2)
        x = random_precubical(cfg)
        report = anticommutativity_report(
            x, Z, trials=args.pairs_per_instance, seed=args.seed + k
        )
        if report.failures:
            disagreements += len(report.failures)
            print(f"instance seed {args.seed + k}: DISAGREEMENT")
            for f in report.failures:
                print(f"  {f.detail}")
        if (k + 1) % 50 == 0:
            print(f"... {k + 1} instances checked, {disagreements} disagreements")

    print(
        f"done: {args.instances} instances, {disagreements} disagreements "
        f"({'counterexample found!' if disagreements else 'all pairs agreed'})"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
