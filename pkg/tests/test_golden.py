"""Fresh suite runs must reproduce the committed golden reports byte for byte."""

from pathlib import Path

import pytest

from hlab.checks import SUITES, RunConfig, dumps, run_suite

GOLDEN = Path(__file__).parent / "golden"


def test_every_suite_has_a_golden_file():
    assert sorted(p.stem for p in GOLDEN.glob("*.json")) == sorted(SUITES)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_matches_golden(suite):
    expected = (GOLDEN / f"{suite}.json").read_text(encoding="utf-8")
    assert dumps(run_suite(suite, RunConfig(timing=False))) == expected
