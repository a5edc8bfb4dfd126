#!/usr/bin/env python3
"""Run the full theorem suite at acceptance scale and print a summary.

Every assertion-class property runs on 100 random instances (20 trials per
seed, seeds 0-4, tensor products of three random graphs so dimension 3 is
reached) over Z and Z/2, with the cochain-level identities additionally
checked over Z/6.
"""

import argparse
import sys
import time

from precubical.propcheck import (
    ASSERTION_PROPERTIES,
    COCHAIN_LEVEL_PROPERTIES,
    GenConfig,
    check,
)
from precubical.rings import Z, Zmod


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials-per-seed", type=int, default=20)
    parser.add_argument("--seeds", type=int, default=5)
    args = parser.parse_args()

    plan = [
        (Z, ASSERTION_PROPERTIES),
        (Zmod(2), ASSERTION_PROPERTIES),
        (Zmod(6), COCHAIN_LEVEL_PROPERTIES),
    ]
    start = time.perf_counter()
    bad = 0
    for ring, props in plan:
        for prop in props:
            trials = 0
            failures = 0
            prop_start = time.perf_counter()
            for seed in range(args.seeds):
                cfg = GenConfig(
                    seed=seed, ring=ring, factors=3, vertices=2, edges=2
                )
                report = check(prop, cfg, trials=args.trials_per_seed)
                trials += report.trials
                failures += len(report.failures)
                for f in report.failures:
                    print(f"    FAILURE seed={f.seed}: {f.detail}")
                    print(f.minimized)
            status = "ok" if failures == 0 else "FAILED"
            print(
                f"{ring.name:4} {prop:26} {trials:4} trials "
                f"{failures:2} failures  {time.perf_counter() - prop_start:6.2f}s  {status}"
            )
            bad += failures
    print(f"total: {time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
