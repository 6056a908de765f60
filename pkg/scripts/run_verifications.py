"""Run every verification driver and print a one-line verdict for each.

    python3 scripts/run_verifications.py             # default universes
    python3 scripts/run_verifications.py --long      # largest supported universes
    python3 scripts/run_verifications.py --json-dir out/
"""
import argparse
import json
import sys
from pathlib import Path

from zfspan.verify import RANGES, THEOREM_IDS, verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--long", action="store_true", help="use each driver's largest max_n")
    ap.add_argument("--only", nargs="*", default=list(THEOREM_IDS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json-dir", type=Path)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    failed = 0
    for theorem in args.only:
        max_n = RANGES[theorem][1] if args.long else None
        report = verify(theorem, max_n, args.seed, args.workers)
        failed += not report.passed
        if args.verbose:
            print(report.render())
        else:
            status = "PASS" if report.passed else "FAIL"
            print(f"{status}  {theorem:24s} checked={report.checked:<9d} "
                  f"counterexamples={len(report.counterexamples)} "
                  f"unclassified={len(report.unclassified)}  [{report.elapsed:.1f}s]")
            for c in report.counterexamples[:3]:
                print(f"      {c.code}: expected {c.expected}, got {c.actual}")
        if args.json_dir:
            args.json_dir.mkdir(parents=True, exist_ok=True)
            (args.json_dir / f"{theorem}.json").write_text(json.dumps(report.to_dict(), indent=2))
        sys.stdout.flush()
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
