"""
Heegaard Floer correction terms from a negative-definite form.

For a knot form G of rank r, the correction term of each Spin^c structure s
of the boundary is d(s) = (max alpha^2 + r) / 4, the maximum running over
characteristic vectors alpha in the class of s.
"""

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Union

from ..diagram.goeritz import GoeritzForm
from ..intlat.smith import Label
from ..utils.helpers import format_rational
from .box_search import BoxSearch
from .spinc import CharVector, SpinCStructure, lattice_context

SpinCLike = Union[SpinCStructure, CharVector, Sequence[int]]


@dataclass(frozen=True)
class CorrectionTerm:
    """
    The correction term of one Spin^c structure.

    Attributes:
        label: Cokernel label of the structure
        value: d(s), an exact rational
        maximizer: A characteristic vector attaining the maximal square
    """

    label: Label
    value: Fraction
    maximizer: CharVector

    def __str__(self) -> str:
        return format_rational(self.value)


def _label(form: GoeritzForm, s: SpinCLike) -> Label:
    context = lattice_context(form)
    if isinstance(s, SpinCStructure):
        return s.label
    if isinstance(s, CharVector):
        return context.label_of(s)
    return context.group.normalize(s)


def max_char_square(form: GoeritzForm, s: SpinCLike) -> Fraction:
    """
    Largest alpha^T G^{-1} alpha over the characteristic vectors of a class.

    Args:
        form: Knot form
        s: SpinCStructure, a characteristic vector in the class, or a label

    Returns:
        The exact maximum (a nonpositive rational)
    """
    return lattice_context(form).maximize(_label(form, s)).value


def box_max_char_square(form: GoeritzForm, s: SpinCLike, bound: int) -> Fraction:
    """
    The same maximum restricted to a box of half-width bound, by exhaustion.

    Args:
        form: Knot form
        s: SpinCStructure, characteristic vector or label
        bound: Box half-width B

    Returns:
        Maximum alpha^2 over the box
    """
    return lattice_context(form).maximize(_label(form, s), search=BoxSearch(bound)).value


def correction_term(form: GoeritzForm, s: SpinCLike) -> CorrectionTerm:
    """
    Compute d(s) = (max alpha^2 + rank) / 4.

    Args:
        form: Knot form
        s: SpinCStructure, characteristic vector or label

    Returns:
        CorrectionTerm
    """
    label = _label(form, s)
    maximum = lattice_context(form).maximize(label)
    return CorrectionTerm(
        label=label,
        value=(maximum.value + form.rank) / 4,
        maximizer=maximum.maximizer,
    )


def all_correction_terms(form: GoeritzForm) -> Dict[Label, CorrectionTerm]:
    """
    Correction terms of every Spin^c structure, keyed by label in
    lexicographic order.
    """
    context = lattice_context(form)
    return OrderedDict((label, correction_term(form, label)) for label in context.group.elements())
