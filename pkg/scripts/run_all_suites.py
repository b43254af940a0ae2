"""Run every equivalence suite and print one summary line each.

    python3 scripts/run_all_suites.py               # full, exhaustive plurality sweep
    python3 scripts/run_all_suites.py --limit 500   # sampled plurality sweep
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from onlinecontrol.verify import SUITES, verify_equivalence


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=None,
                    help="sample this many plurality instances instead of enumerating")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json-dir", default=None, help="write one JSON report per suite here")
    args = ap.parse_args()

    failed = False
    for suite in SUITES:
        t0 = time.perf_counter()
        limit = args.limit if suite == "plurality-fast-vs-exact" else None
        report = verify_equivalence(suite, seed=args.seed, limit=limit)
        print(f"{report.summary()}  ({time.perf_counter() - t0:.1f}s)")
        if not report.ok:
            failed = True
            print(report.to_text())
        if args.json_dir:
            out = Path(args.json_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{suite}.json").write_text(report.to_json() + "\n", encoding="utf-8")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
