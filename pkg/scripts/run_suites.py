"""Run every suite, print one summary line per check and the wall time.

Usage: python3 scripts/run_suites.py [--jobs N] [suite ...]
"""

from __future__ import annotations

import argparse
import sys
import time

from hlab.checks import SUITES, RunConfig, exit_code, run_checks


def main(argv: list[str]) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("suites", nargs="*", default=["all"])
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    reports = run_checks(args.suites, RunConfig(jobs=args.jobs))
    for r in reports:
        print(r.summary())
    print(f"{len(reports)} checks over {len(SUITES) if args.suites == ['all'] else len(args.suites)} "
          f"suites in {time.perf_counter() - t0:.1f}s")
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
