#!/usr/bin/env python3
"""Run verification campaigns from the command line.

Examples:
    python scripts/run_verify.py --family all --count 50 --seed 42 --field Q
    python scripts/run_verify.py --family main-theorem --field F65537 \
        --out report.json
"""

import argparse
import sys
import time

from regcore.verify import FAMILIES, render_report, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--family", choices=FAMILIES, default="all")
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--field", default="Q")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    t0 = time.time()
    reports = run_suite(args.family, count=args.count, seed=args.seed,
                        field=args.field)
    rendered = render_report(reports, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    failed = sum(1 for r in reports if not r.verdict)
    print(f"# {len(reports)} checks, {failed} failures, "
          f"{time.time() - t0:.1f}s", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
