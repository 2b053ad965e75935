#!/usr/bin/env python3
"""Run the whole exhaustive verification battery over small ground sets.

Default covers n in 1..4 (seconds). --deep adds the n=5 sweep for the
height-4 checks (minutes; ~2.7M families enumerated per check).
"""

import argparse
import sys

from ucf import THEOREM_IDS, verify_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--deep", action="store_true", help="include the n=5 runs")
    parser.add_argument("--workers", type=int, default=None, help="parallel workers")
    args = parser.parse_args()

    failures = 0
    print(f"{'check':8s} {'n':>2s} {'checked':>9s} {'violations':>10s} {'time':>8s}")
    for tid in THEOREM_IDS:
        top = 5 if args.deep else 4
        for n in range(1, top + 1):
            report = verify_theorem(tid, n, workers=args.workers)
            status = "ok" if report.ok else "FAIL"
            print(
                f"{tid:8s} {n:2d} {report.families_checked:9d} "
                f"{len(report.violations):10d} {report.elapsed:7.2f}s  {status}"
            )
            if not report.ok:
                failures += 1
                for violation in report.violations[:5]:
                    print(f"    {violation.family.member_sets()}  {violation.detail}")

    necessity = verify_theorem("T2.1", 3, hypothesis_necessity=True)
    print(
        f"\nnecessity check (T2.1 without n >= 4): "
        f"{len(necessity.violations)} counterexample(s) found at n=3"
    )
    if not necessity.ok:
        failures += 1

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
