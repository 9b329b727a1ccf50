#!/usr/bin/env python3
"""Reproduce the small-case value table with bound verdicts.

Writes one CSV covering k = 2..5 for all valid orders up to --max-n,
reusing a cache so repeated runs are fast and byte-identical.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mopar.runner import Limits, ResultCache, emit_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--out", type=Path, default=Path("ar-table.csv"))
    parser.add_argument("--cache", type=Path, default=Path("ar-cache.jsonl"))
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--budget-ms", type=float, default=None,
                        help="optional per-graph budget for the big cells")
    args = parser.parse_args()

    cache = ResultCache(args.cache)
    limits = Limits(max_millis=args.budget_ms)
    path = emit_table(
        (4, args.max_n), (2, 5), args.out, args.format,
        limits=limits, cache=cache,
    )
    print(f"wrote {path} ({len(cache.entries)} cached solves)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
