"""Recompute ex(n) and z(n) exactly and check them against the reference values.

    python scripts/verify_table.py            # n = 6..12
    python scripts/verify_table.py --extended # n = 6..14
"""

import argparse
import sys
import time

from girth5.exact import SearchConfig, verify_small_table


def main():
    ap = argparse.ArgumentParser(description="exact small-case table")
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    t0 = time.perf_counter()
    report = verify_small_table(SearchConfig(extended=args.extended, threads=args.threads), raise_on_mismatch=False)
    print("\n".join(report.lines()))
    print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    sys.exit(0 if report.ok else 2)


if __name__ == "__main__":
    main()
