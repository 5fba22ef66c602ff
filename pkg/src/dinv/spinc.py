"""
Characteristic vectors and Spin^c structures of a knot form.

For a negative-definite form G with odd determinant, Spin^c structures on
the boundary 3-manifold correspond to characteristic covectors modulo 2G Z^n,
and are labelled by the cokernel of G through s -> (alpha - alpha_0) / 2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..diagram.goeritz import GoeritzForm
from ..intlat import IntMatrix, adjugate, cokernel, solve_mod2
from ..intlat.smith import Label
from ..utils.errors import MatrixError
from .search_base import BaseSearch, SearchProblem
from .sphere_decoder import SphereDecoder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharVector:
    """
    An integer vector alpha with alpha_i = G_ii (mod 2) for all i.

    Attributes:
        coordinates: The entries of alpha
    """

    coordinates: Tuple[int, ...]

    def is_characteristic(self, matrix: IntMatrix) -> bool:
        return len(self.coordinates) == matrix.nrows and all(
            (a - d) % 2 == 0 for a, d in zip(self.coordinates, matrix.diagonal())
        )

    def __neg__(self) -> "CharVector":
        return CharVector(tuple(-a for a in self.coordinates))

    def __len__(self) -> int:
        return len(self.coordinates)


@dataclass(frozen=True)
class SpinCStructure:
    """
    A Spin^c structure with its stored representative.

    Attributes:
        label: Element of coker(G) in invariant-factor coordinates
        representative: A characteristic vector of maximal square in the class
        is_canonical: True for the unique self-conjugate structure
    """

    label: Label
    representative: CharVector
    is_canonical: bool = False


@dataclass(frozen=True)
class CharSquareMaximum:
    """
    Largest alpha^2 over a Spin^c class.

    Attributes:
        value: max alpha^T G^{-1} alpha, exact
        maximizer: The normalised maximiser
        nodes: Candidates examined by the search
    """

    value: Fraction
    maximizer: CharVector
    nodes: int = 0


def _normal_key(alpha: Sequence[int]):
    # Smallest absolute values first, then positive entries preferred.
    return tuple(abs(a) for a in alpha), tuple(-a for a in alpha)


class LatticeContext:
    """
    Per-form data shared by every Spin^c computation: determinant,
    adjugate, cokernel coordinates, canonical vector and cached maxima.
    """

    def __init__(self, form: GoeritzForm):
        """
        Args:
            form: A validated GoeritzForm
        """
        self.form = form
        self.matrix = form.matrix
        self.det = form.determinant
        self.adjugate = adjugate(self.matrix)
        self.group = cokernel(self.matrix)
        self.gram = -self.matrix
        x = solve_mod2(self.matrix, self.matrix.diagonal())
        self.canonical = CharVector(self.matrix.apply(x))
        self._maxima: Dict[Label, CharSquareMaximum] = {}

    def char_square(self, alpha: Sequence[int]) -> Fraction:
        """alpha^T G^{-1} alpha as an exact rational."""
        if len(alpha) == 0:
            return Fraction(0)
        return Fraction(self.adjugate.bilinear(alpha, alpha), self.det)

    def require_characteristic(self, alpha: CharVector) -> None:
        if not alpha.is_characteristic(self.matrix):
            raise MatrixError(f"Vector {list(alpha.coordinates)} is not characteristic for this form")

    def label_of(self, alpha: CharVector) -> Label:
        self.require_characteristic(alpha)
        half = [(a - b) // 2 for a, b in zip(alpha.coordinates, self.canonical.coordinates)]
        return self.group.coordinates(half)

    def coset_vector(self, label: Sequence[int]) -> Tuple[int, ...]:
        """alpha_0 + 2 * lift(label), some characteristic vector in the class."""
        lift = self.group.lift(label)
        return tuple(a + 2 * h for a, h in zip(self.canonical.coordinates, lift))

    def search_problem(self, alpha: Sequence[int]) -> SearchProblem:
        # alpha + 2Gv has square alpha^2 + 4(v.alpha) + 4 v^T G v, which is
        # largest when v is closest to -G^{-1} alpha / 2 in the -G metric.
        image = self.adjugate.apply(alpha)
        center = tuple(Fraction(-y, 2 * self.det) for y in image)
        return SearchProblem(gram=self.gram, center=center)

    def maximize(self, label: Sequence[int], search: Optional[BaseSearch] = None) -> CharSquareMaximum:
        """
        Maximise alpha^2 over the Spin^c class with the given label.

        Args:
            label: Group element
            search: Search to use; the exact sphere decoder by default

        Returns:
            CharSquareMaximum with a normalised maximiser
        """
        label = self.group.normalize(label)
        if search is None and label in self._maxima:
            return self._maxima[label]
        rep = self.coset_vector(label)
        engine = search or SphereDecoder()
        result = engine.execute(self.search_problem(rep))
        candidates = [
            tuple(a + 2 * g for a, g in zip(rep, self.matrix.apply(v)))
            for v in result.minimizers
        ]
        best = min(candidates, key=_normal_key)
        maximum = CharSquareMaximum(
            value=self.char_square(best),
            maximizer=CharVector(best),
            nodes=result.nodes,
        )
        if search is None:
            self._maxima[label] = maximum
        return maximum


@lru_cache(maxsize=64)
def lattice_context(form: GoeritzForm) -> LatticeContext:
    return LatticeContext(form)


def canonical_characteristic(form: GoeritzForm) -> CharVector:
    """
    The characteristic vector of the self-conjugate Spin^c structure.

    Computed as alpha_0 = G x where G x = diag(G) over GF(2); it lies in the
    image of G, so it is invariant under conjugation.

    Args:
        form: Knot form of odd determinant

    Returns:
        CharVector alpha_0
    """
    return lattice_context(form).canonical


def label_of(form: GoeritzForm, alpha: Union[CharVector, Sequence[int]]) -> Label:
    """Cokernel label of the Spin^c structure represented by alpha."""
    if not isinstance(alpha, CharVector):
        alpha = CharVector(tuple(alpha))
    return lattice_context(form).label_of(alpha)


def spinc_enumerate(form: GoeritzForm) -> List[SpinCStructure]:
    """
    List every Spin^c structure of the boundary, one per cokernel element.

    Labels are enumerated lexicographically, so the canonical structure
    comes first.

    Args:
        form: Knot form of odd determinant

    Returns:
        |det| structures with pairwise distinct labels
    """
    context = lattice_context(form)
    zero = context.group.zero
    structures = []
    for label in context.group.elements():
        maximum = context.maximize(label)
        structures.append(SpinCStructure(
            label=label,
            representative=maximum.maximizer,
            is_canonical=label == zero,
        ))
    logger.debug("Enumerated %d Spin^c structures", len(structures))
    return structures
