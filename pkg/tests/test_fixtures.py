"""
Reproduction of the bundled knot table.
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from src.cli import KnotRecord
from src.diagram import mirror, parse_pd
from src.grs import Verdict, obstruction, verify_expected

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _records():
    lines = (FIXTURES / "knots.jsonl").read_text().splitlines()
    return [KnotRecord.from_json(line) for line in lines if line.strip()]


FINITE_ORDER = {"unknot", "4_1"}


class TestKnotTable:
    """Test cases for the fixture table."""

    @pytest.mark.parametrize("record", _records(), ids=lambda r: r.name)
    def test_expected_values(self, record):
        """Test det and every D value up to one global sign."""
        report = obstruction(record.to_input(), name=record.name)
        matched, detail = verify_expected(report, record.expected)
        assert matched, detail

    @pytest.mark.parametrize("record", _records(), ids=lambda r: r.name)
    def test_verdicts(self, record):
        """Test infinite order for every knot outside the finite-order set."""
        report = obstruction(record.to_input(), name=record.name)
        if record.name in FINITE_ORDER:
            assert report.verdict is Verdict.NO_OBSTRUCTION
        else:
            assert report.verdict is Verdict.INFINITE_ORDER

    def test_sources_are_labelled(self):
        """Test provenance metadata on every record."""
        for record in _records():
            assert record.source in ("alternating-pd", "external-matrix")
            assert record.provenance
            assert (record.source == "external-matrix") == (record.goeritz is not None)

    def test_pd_files_match_table(self):
        """Test that standalone .pd files agree with the JSON-lines table."""
        table = {r.name: r.pd for r in _records() if r.pd is not None}
        for path in FIXTURES.glob("*.pd"):
            assert json.loads(path.read_text()) == table[path.stem]

    def test_nine_thirty(self):
        """Test the exact D values of 9_30."""
        report = obstruction(parse_pd((FIXTURES / "9_30.pd").read_text()), name="9_30")
        assert report.det == 53
        assert report.form.rank == 5
        assert report.D(1) == 0
        assert report.D(53) == 4

    def test_mirror_negates_D(self):
        """Test that the mirror diagram negates every D value."""
        d = parse_pd((FIXTURES / "9_30.pd").read_text())
        assert obstruction(mirror(d)).D(53) == -4
        t = parse_pd((FIXTURES / "3_1.pd").read_text())
        assert obstruction(mirror(t)).D(1) == Fraction(1, 2)

    def test_composite_determinants(self):
        """Test knots whose determinant has two prime factors."""
        ten_58 = obstruction(parse_pd((FIXTURES / "10_58.pd").read_text()))
        assert [(d.q, d.value) for d in ten_58.D_values] == [(1, 0), (5, 0), (13, 4)]
        ten_60 = obstruction(parse_pd((FIXTURES / "10_60.pd").read_text()))
        assert [(d.q, d.value) for d in ten_60.D_values] == [(1, 0), (5, 0), (17, 4)]

    def test_prime_power_range(self):
        """Test that det 27 = 3^3 brings D_9 into range but not D_27."""
        record = next(r for r in _records() if r.name == "T(2,27)")
        report = obstruction(record.to_input(), name=record.name)
        assert report.form.rank == 1
        assert [d.q for d in report.D_values] == [1, 3, 9]

    def test_signs_agree_across_primes(self):
        """Test that the nonzero D values of T(2,15) share one sign."""
        record = next(r for r in _records() if r.name == "T(2,15)")
        report = obstruction(record.to_input(), name=record.name)
        assert sorted(d.q for d in report.nonzero_D) == [1, 3, 5]
        assert len({d.value > 0 for d in report.nonzero_D}) == 1
        flipped = {"det": 15, "D": {"1": "7/2", "3": "-23/6", "5": "11/2"}}
        assert not verify_expected(report, flipped)[0]
