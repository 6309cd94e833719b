"""Regenerate tests/golden/<suite>.json from fresh runs (timing disabled).

Usage: python3 scripts/generate_golden.py [suite ...]
"""

from __future__ import annotations

import sys
from pathlib import Path

from hlab.checks import SUITES, RunConfig, dumps, run_suite

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main(argv: list[str]) -> int:
    suites = argv or list(SUITES)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for s in suites:
        reports = run_suite(s, RunConfig(timing=False))
        (GOLDEN / f"{s}.json").write_text(dumps(reports), encoding="utf-8")
        bad = [r.check_id for r in reports if not r.passed]
        print(f"{s}: {len(reports)} reports" + (f", not passing: {bad}" if bad else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
