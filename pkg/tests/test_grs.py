"""
Unit tests for D invariants and the obstruction report.
"""

from fractions import Fraction

import pytest
from hypothesis import given

from src.diagram import GoeritzForm, parse_pd
from src.grs import (
    D_invariant,
    PrimePowerSpec,
    Verdict,
    factorize,
    obstruction,
    subgroup_coset,
    verify_expected,
)
from src.intlat import IntMatrix, cokernel
from src.utils.errors import GroupError
from tests.forms import FORM_SETTINGS, knot_forms

TREFOIL = GoeritzForm.from_rows("[[-3]]")
FIGURE_EIGHT = GoeritzForm.from_rows("[[-2, 1], [1, -3]]")


class TestFactorize:
    """Test cases for factorize."""

    def test_examples(self):
        """Test primes, prime powers and 1."""
        assert factorize(53) == [(53, 1)]
        assert factorize(125) == [(5, 3)]
        assert factorize(1) == []
        assert factorize(65) == [(5, 1), (13, 1)]

    def test_product(self):
        """Test that the factorisation reconstructs N."""
        for n in range(1, 400):
            product = 1
            for p, m in factorize(n):
                product *= p ** m
            assert product == n

    def test_zero(self):
        """Test that 0 is rejected."""
        with pytest.raises(GroupError):
            factorize(0)


class TestPrimePowerSpec:
    """Test cases for PrimePowerSpec."""

    def test_trivial(self):
        """Test p = 1."""
        assert PrimePowerSpec.trivial().q == 1
        with pytest.raises(GroupError):
            PrimePowerSpec(p=1, e=1)

    def test_range(self):
        """Test the exponent range 0..(m + 1) // 2."""
        assert PrimePowerSpec(p=5, e=2, m=3).q == 25
        with pytest.raises(GroupError):
            PrimePowerSpec(p=5, e=3, m=3)
        with pytest.raises(GroupError):
            PrimePowerSpec(p=5, e=-1, m=3)

    def test_not_prime(self):
        """Test a composite base."""
        with pytest.raises(GroupError):
            PrimePowerSpec(p=15, e=1, m=1)

    def test_multiplicity_optional(self):
        """Test that the multiplicity may be left to the form."""
        spec = PrimePowerSpec(p=3, e=1)
        assert spec.m is None
        assert spec.q == 3


class TestSubgroupCoset:
    """Test cases for subgroup_coset."""

    def test_fifteen(self):
        """Test the order-5 subgroup of Z/15."""
        group = cokernel(IntMatrix([[-15]]))
        assert subgroup_coset(group, 5) == [(0,), (3,), (6,), (9,), (12,)]

    def test_trivial_subgroup(self):
        """Test q = 1."""
        assert subgroup_coset(cokernel(IntMatrix([[-53]])), 1) == [(0,)]

    def test_prime_square(self):
        """Test the order-25 subgroup of Z/125."""
        labels = subgroup_coset(cokernel(IntMatrix([[-125]])), 25)
        assert len(labels) == 25
        assert all(h % 5 == 0 for (h,) in labels)

    def test_subgroup_property(self):
        """Test |H_q| = q and q h = 0 for every divisor q."""
        n = 45
        group = cokernel(IntMatrix([[-n]]))
        for q in (1, 3, 5, 9, 15, 45):
            labels = subgroup_coset(group, q)
            assert len(labels) == q
            assert all((q * h) % n == 0 for (h,) in labels)

    def test_trivial_group(self):
        """Test the group of order 1."""
        assert subgroup_coset(cokernel(IntMatrix([[-1]])), 1) == [()]

    def test_errors(self):
        """Test non-cyclic groups and non-divisors."""
        with pytest.raises(GroupError):
            subgroup_coset(cokernel(IntMatrix([[-3, 0], [0, -3]])), 3)
        with pytest.raises(GroupError):
            subgroup_coset(cokernel(IntMatrix([[-15]])), 7)


class TestDInvariant:
    """Test cases for D_invariant."""

    def test_trefoil(self):
        """Test D_1 = -1/2 and D_3 = -1/6."""
        assert D_invariant(TREFOIL, PrimePowerSpec.trivial()) == Fraction(-1, 2)
        assert D_invariant(TREFOIL, PrimePowerSpec(p=3, e=1, m=1)) == Fraction(-1, 6)
        assert D_invariant(TREFOIL, PrimePowerSpec(p=3, e=1)) == Fraction(-1, 6)

    def test_figure_eight(self):
        """Test that both invariants vanish."""
        assert D_invariant(FIGURE_EIGHT, PrimePowerSpec.trivial()) == 0
        assert D_invariant(FIGURE_EIGHT, PrimePowerSpec(p=5, e=1, m=1)) == 0

    def test_prime_cube(self):
        """Test D_1, D_3 and D_9 of [[-27]], where e = 2 is in range."""
        form = GoeritzForm.from_rows("[[-27]]")
        assert D_invariant(form, PrimePowerSpec.trivial()) == Fraction(-13, 2)
        assert D_invariant(form, PrimePowerSpec(p=3, e=1)) == Fraction(-15, 2)
        assert D_invariant(form, PrimePowerSpec(p=3, e=2, m=3)) == Fraction(-37, 2)
        with pytest.raises(GroupError):
            D_invariant(form, PrimePowerSpec(p=3, e=3))

    def test_two_primes(self):
        """Test D_3 and D_5 of [[-15]]."""
        form = GoeritzForm.from_rows("[[-15]]")
        assert D_invariant(form, PrimePowerSpec(p=3, e=1)) == Fraction(-23, 6)
        assert D_invariant(form, PrimePowerSpec(p=5, e=1)) == Fraction(-11, 2)

    def test_wrong_multiplicity(self):
        """Test a stated multiplicity that disagrees with det."""
        with pytest.raises(GroupError, match="multiplicity"):
            D_invariant(TREFOIL, PrimePowerSpec(p=3, e=1, m=3))

    def test_not_dividing(self):
        """Test q not dividing det."""
        with pytest.raises(GroupError):
            D_invariant(TREFOIL, PrimePowerSpec(p=5, e=1, m=1))

    def test_noncyclic(self):
        """Test a non-cyclic cokernel."""
        form = GoeritzForm.from_rows("[[-3, 0], [0, -3]]")
        with pytest.raises(GroupError):
            D_invariant(form, PrimePowerSpec(p=3, e=1, m=2))

    @FORM_SETTINGS
    @given(knot_forms())
    def test_negated_labels(self, form):
        """Test that summing over the negated subgroup gives the same D."""
        report = obstruction(form)
        if report.verdict is Verdict.NOT_APPLICABLE_NONCYCLIC:
            return
        group = report.h2_structure
        for d in report.D_values:
            labels = subgroup_coset(group, d.q)
            assert sum(report.d_table[group.negate(h)] for h in labels) == d.value


class TestObstruction:
    """Test cases for obstruction and verify_expected."""

    def test_trefoil(self):
        """Test the full report of [[-3]]."""
        report = obstruction(TREFOIL, name="3_1")
        assert report.det == 3
        assert report.factorization == ((3, 1),)
        assert [(d.p, d.e, d.value) for d in report.D_values] == [
            (1, 0, Fraction(-1, 2)), (3, 1, Fraction(-1, 6)),
        ]
        assert report.verdict is Verdict.INFINITE_ORDER
        assert report.D(1) == Fraction(-1, 2)
        assert report.D(7) is None

    def test_figure_eight(self):
        """Test no obstruction for a finite-order knot."""
        report = obstruction(FIGURE_EIGHT)
        assert report.verdict is Verdict.NO_OBSTRUCTION
        assert report.nonzero_D == []

    def test_d1_is_canonical_term(self):
        """Test D_1 = d(s_0)."""
        report = obstruction(GoeritzForm.from_rows("[[-2, 1, 0], [1, -3, 1], [0, 1, -3]]"))
        assert report.D(1) == report.d_table[report.h2_structure.zero]

    def test_exponent_range(self):
        """Test that det 125 gets D_1, D_5 and D_25."""
        report = obstruction(GoeritzForm.from_rows("[[-125]]"))
        assert [d.q for d in report.D_values] == [1, 5, 25]

    def test_noncyclic(self):
        """Test that non-cyclic cokernels skip the D values."""
        report = obstruction(GoeritzForm.from_rows("[[-3, 0], [0, -3]]"))
        assert report.verdict is Verdict.NOT_APPLICABLE_NONCYCLIC
        assert report.D_values == ()
        assert len(report.d_table) == 9

    def test_unknot(self):
        """Test the crossingless diagram."""
        report = obstruction(parse_pd("[]"), name="unknot")
        assert report.det == 1
        assert report.factorization == ()
        assert report.verdict is Verdict.NO_OBSTRUCTION

    def test_accepts_rows(self):
        """Test a raw matrix input."""
        assert obstruction([[-3]]).det == 3

    def test_verify_expected(self):
        """Test sign-tolerant comparison with expected values."""
        report = obstruction(TREFOIL)
        assert verify_expected(report, {"det": 3, "D": {"1": "-1/2", "3": "-1/6"}})[0]
        assert verify_expected(report, {"det": 3, "D": {"1": "1/2", "3": "1/6"}})[0]
        assert not verify_expected(report, {"det": 3, "D": {"1": "1/2", "3": "-1/6"}})[0]
        assert not verify_expected(report, {"det": 5})[0]
        assert not verify_expected(report, {"det": 3, "D": {"3": "-1/6"}})[0]
