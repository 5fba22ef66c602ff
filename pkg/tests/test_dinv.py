"""
Unit tests for Spin^c structures and correction terms.
"""

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given

from src.diagram import GoeritzForm
from src.dinv import (
    BoxSearch,
    CharVector,
    SearchProblem,
    SphereDecoder,
    all_correction_terms,
    box_max_char_square,
    canonical_characteristic,
    correction_term,
    label_of,
    lattice_context,
    max_char_square,
    spinc_enumerate,
)
from src.intlat import IntMatrix
from src.utils.errors import MatrixError
from tests.forms import (
    FORM_SETTINGS,
    any_forms,
    knot_forms,
    random_form,
    random_gram_form,
    random_unimodular,
)

TREFOIL = GoeritzForm.from_rows("[[-3]]")
FIGURE_EIGHT = GoeritzForm.from_rows("[[-2, 1], [1, -3]]")
UNIT = GoeritzForm.from_rows("[[-1]]")
RANK_ZERO = GoeritzForm(IntMatrix([]))


def d_multiset(form):
    return Counter(term.value for term in all_correction_terms(form).values())


class TestCanonicalCharacteristic:
    """Test cases for canonical_characteristic."""

    def test_trefoil(self):
        """Test the canonical vector of [[-3]]."""
        alpha = canonical_characteristic(TREFOIL)
        assert alpha.coordinates == (-3,)
        assert alpha.is_characteristic(TREFOIL.matrix)
        assert label_of(TREFOIL, alpha) == (0,)

    def test_self_conjugate(self):
        """Test that -alpha_0 lies in the same class."""
        alpha = canonical_characteristic(FIGURE_EIGHT)
        assert label_of(FIGURE_EIGHT, -alpha) == label_of(FIGURE_EIGHT, alpha) == (0,)

    def test_rank_zero(self):
        """Test the empty vector."""
        assert canonical_characteristic(RANK_ZERO).coordinates == ()

    def test_not_characteristic(self):
        """Test labelling a vector of the wrong parity."""
        with pytest.raises(MatrixError):
            label_of(TREFOIL, CharVector((2,)))


class TestSpinCEnumerate:
    """Test cases for spinc_enumerate."""

    def test_trefoil(self):
        """Test three structures with the canonical one first."""
        structures = spinc_enumerate(TREFOIL)
        assert [s.label for s in structures] == [(0,), (1,), (2,)]
        assert structures[0].is_canonical
        assert structures[0].representative.coordinates == (3,)
        assert not any(s.is_canonical for s in structures[1:])

    def test_representatives_match_labels(self):
        """Test that each stored representative lies in its own class."""
        for s in spinc_enumerate(FIGURE_EIGHT):
            assert s.representative.is_characteristic(FIGURE_EIGHT.matrix)
            assert label_of(FIGURE_EIGHT, s.representative) == s.label

    def test_unimodular(self):
        """Test a single structure for det 1."""
        structures = spinc_enumerate(UNIT)
        assert len(structures) == 1
        assert structures[0].label == ()

    @FORM_SETTINGS
    @given(any_forms())
    def test_label_bijectivity(self, form):
        """Test |labels| = |det| with exactly one canonical structure."""
        structures = spinc_enumerate(form)
        assert len(structures) == form.order
        assert len({s.label for s in structures}) == form.order
        assert sum(s.is_canonical for s in structures) == 1


class TestCorrectionTerms:
    """Test cases for max_char_square and correction_term."""

    def test_trefoil(self):
        """Test d = -1/2, 1/6, 1/6."""
        assert max_char_square(TREFOIL, (0,)) == Fraction(-3)
        assert correction_term(TREFOIL, (0,)).value == Fraction(-1, 2)
        assert correction_term(TREFOIL, (1,)).value == Fraction(1, 6)
        assert correction_term(TREFOIL, (2,)).value == Fraction(1, 6)

    def test_figure_eight(self):
        """Test the multiset {0, 2/5, 2/5, -2/5, -2/5}."""
        assert d_multiset(FIGURE_EIGHT) == Counter(
            {Fraction(0): 1, Fraction(2, 5): 2, Fraction(-2, 5): 2}
        )
        assert correction_term(FIGURE_EIGHT, (0,)).value == 0

    def test_unit(self):
        """Test [[-1]]: (-1 + 1) / 4 = 0."""
        assert correction_term(UNIT, ()).value == 0

    def test_rank_zero(self):
        """Test the empty form."""
        terms = all_correction_terms(RANK_ZERO)
        assert list(terms) == [()]
        assert terms[()].value == 0

    def test_accepts_structures_and_vectors(self):
        """Test the three ways of naming a class."""
        s = spinc_enumerate(TREFOIL)[1]
        expected = correction_term(TREFOIL, s.label).value
        assert correction_term(TREFOIL, s).value == expected
        assert correction_term(TREFOIL, CharVector((-5,))).value == expected

    def test_maximizer_attains_value(self):
        """Test that the stored maximiser has the reported square."""
        context = lattice_context(FIGURE_EIGHT)
        for label, term in all_correction_terms(FIGURE_EIGHT).items():
            assert context.char_square(term.maximizer.coordinates) == 4 * term.value - FIGURE_EIGHT.rank

    def test_diagonal_sum(self):
        """Test a non-cyclic form [[-3, 0], [0, -3]]."""
        form = GoeritzForm.from_rows("[[-3, 0], [0, -3]]")
        values = d_multiset(form)
        assert sum(values.values()) == 9
        assert values[Fraction(-1)] == 1

    @FORM_SETTINGS
    @given(any_forms())
    def test_conjugation_symmetry(self, form):
        """Test d(h) = d(-h)."""
        group = lattice_context(form).group
        terms = all_correction_terms(form)
        for label, term in terms.items():
            assert terms[group.negate(label)].value == term.value

    @FORM_SETTINGS
    @given(any_forms())
    def test_denominator_bound(self, form):
        """Test that 4 |det| d is an integer."""
        for term in all_correction_terms(form).values():
            assert (4 * form.order * term.value).denominator == 1

    @FORM_SETTINGS
    @given(any_forms(max_rank=2, max_det=15), knot_forms(max_rank=2, max_det=15))
    def test_block_sum_additivity(self, a, b):
        """Test that d tables add under block sums."""
        total = GoeritzForm(a.matrix.block_sum(b.matrix))
        expected = Counter()
        for x, m in d_multiset(a).items():
            for y, k in d_multiset(b).items():
                expected[x + y] += m * k
        assert d_multiset(total) == expected

    def test_congruence_invariance(self):
        """Test the d multiset under 100 random unimodular congruences."""
        rng = random.Random(20240607)
        for _ in range(100):
            form = random_form(rng, max_rank=4, max_det=45)
            u = random_unimodular(rng, form.rank)
            moved = GoeritzForm(form.matrix.congruent(u))
            assert d_multiset(moved) == d_multiset(form)

    def test_congruence_invariance_off_dominant(self):
        """Test congruence invariance on forms -A^T A - I."""
        rng = random.Random(31337)
        for _ in range(50):
            form = random_gram_form(rng, max_rank=3, max_det=40)
            u = random_unimodular(rng, form.rank)
            moved = GoeritzForm(form.matrix.congruent(u))
            assert d_multiset(moved) == d_multiset(form)


class TestSearches:
    """Test cases for the sphere decoder against the box oracle."""

    def test_decoder_finds_all_ties(self):
        """Test that equidistant points are all returned."""
        problem = SearchProblem(gram=IntMatrix([[1]]), center=(Fraction(1, 2),))
        result = SphereDecoder().execute(problem)
        assert result.distance == Fraction(1, 4)
        assert sorted(result.minimizers) == [(0,), (1,)]

    def test_decoder_records_improvements(self):
        """Test the step trace."""
        decoder = SphereDecoder()
        decoder.execute(SearchProblem(gram=IntMatrix([[2, 1], [1, 2]]), center=(Fraction(7, 3), Fraction(-5, 4))))
        steps = decoder.get_steps()
        assert steps
        assert steps[0]["step_number"] == 1
        assert all(a["distance"] > b["distance"] for a, b in zip(steps, steps[1:]))
        assert decoder.get_step(0) is steps[0]
        assert decoder.get_step(len(steps)) is None
        assert steps[0]["algorithm"] == decoder.name == "Sphere Decoder"

    def test_box_matches_decoder_on_problem(self):
        """Test both searches on one problem."""
        problem = SearchProblem(
            gram=IntMatrix([[3, 1, 0], [1, 4, 2], [0, 2, 5]]),
            center=(Fraction(5, 7), Fraction(-13, 7), Fraction(2, 3)),
        )
        exact = SphereDecoder().execute(problem)
        box = BoxSearch(3)
        boxed = box.execute(problem)
        assert exact.distance == boxed.distance
        assert set(exact.minimizers) == set(boxed.minimizers)
        assert all(problem.distance(v) == exact.distance for v in exact.minimizers)
        assert box.get_steps()[-1]["algorithm"] == "Box Search"

    def test_box_bound_validation(self):
        """Test a negative bound."""
        with pytest.raises(ValueError):
            BoxSearch(-1)

    def test_oracle_equivalence(self):
        """Test 200 random forms, every class, against a box of half-width 8."""
        rng = random.Random(1729)
        for _ in range(200):
            form = random_form(rng, max_rank=3, max_det=60)
            for label in lattice_context(form).group.elements():
                assert max_char_square(form, label) == box_max_char_square(form, label, 8)

    def test_oracle_equivalence_off_dominant(self):
        """Test forms -A^T A - I, every class, against a box of half-width 8."""
        rng = random.Random(4242)
        for _ in range(60):
            form = random_gram_form(rng, max_rank=3, max_det=40)
            for label in lattice_context(form).group.elements():
                assert max_char_square(form, label) == box_max_char_square(form, label, 8)
