"""
Goeritz matrices and negative-definite knot forms.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Union

from ..intlat import IntMatrix, determinant, is_negative_definite
from ..utils.errors import DiagramError, MatrixError
from ..utils.helpers import parse_int_rows
from .coloring import Coloring, checkerboard
from .faces import FaceComplex, build_faces
from .planar_diagram import PlanarDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoeritzSource:
    """
    Where a Goeritz form came from.

    Attributes:
        kind: "diagram" or "matrix"
        coloring: Index of the coloring used (diagram forms only)
        deleted_region: Face whose row and column were removed (diagram forms only)
    """

    kind: str = "matrix"
    coloring: Optional[int] = None
    deleted_region: Optional[int] = None

    def to_dict(self):
        if self.kind == "matrix":
            return {"kind": self.kind}
        return {"kind": self.kind, "coloring": self.coloring, "deleted_region": self.deleted_region}


@dataclass(frozen=True)
class GoeritzForm:
    """
    A symmetric negative-definite integer matrix of odd determinant.

    It presents the intersection lattice of a negative-definite 4-manifold
    bounded by the double branched cover of a knot.

    Attributes:
        matrix: The form
        mirror_flag: True if the form belongs to the mirror of the input knot
        source: Provenance of the matrix
    """

    matrix: IntMatrix
    mirror_flag: bool = False
    source: GoeritzSource = field(default_factory=GoeritzSource)

    def __post_init__(self):
        m = self.matrix
        if not m.is_square():
            raise MatrixError(f"Goeritz matrix must be square, got shape {m.shape}")
        if not m.is_symmetric():
            raise MatrixError("Goeritz matrix is not symmetric")
        if not is_negative_definite(m):
            raise MatrixError("Goeritz matrix is not negative definite")
        if self.determinant % 2 == 0:
            raise MatrixError(f"Goeritz matrix has even determinant {self.determinant} (not a knot form)")

    @classmethod
    def from_rows(cls, rows: Union[str, Sequence[Sequence[int]]]) -> "GoeritzForm":
        """
        Validate a user-supplied matrix.

        Args:
            rows: JSON string such as "[[-3]]" or a nested list

        Returns:
            GoeritzForm with a "matrix" source
        """
        return cls(IntMatrix(parse_int_rows(rows)))

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @cached_property
    def determinant(self) -> int:
        return determinant(self.matrix)

    @property
    def order(self) -> int:
        """|det|, the order of the first homology of the double branched cover."""
        return abs(self.determinant)


def goeritz_matrix(
    diagram: PlanarDiagram,
    coloring: Coloring,
    deleted_region: Optional[int] = None,
) -> IntMatrix:
    """
    Build the reduced Goeritz matrix of a coloring.

    Off-diagonal entries are minus the sum of crossing signs joining two
    white regions; diagonal entries make every row of the unreduced matrix
    sum to zero. The row and column of one white region are then removed.

    Args:
        diagram: The diagram
        coloring: One of its checkerboard colorings
        deleted_region: White face to remove (defaults to the lowest-numbered)

    Returns:
        Square IntMatrix of size (white regions - 1), rows in face order

    Raises:
        DiagramError: If the deleted region is not a white face
    """
    regions = coloring.white_regions
    if deleted_region is None:
        deleted_region = regions[0]
    if deleted_region not in coloring.white:
        raise DiagramError(f"Region {deleted_region} is not a white face of coloring {coloring.index}")

    position = {face: k for k, face in enumerate(regions)}
    size = len(regions)
    full = [[0] * size for _ in range(size)]
    for eta, (a, b) in zip(coloring.eta, coloring.white_pairs):
        if a == b:
            continue
        i, j = position[a], position[b]
        full[i][j] -= eta
        full[j][i] -= eta
    for i in range(size):
        full[i][i] = -sum(full[i][j] for j in range(size) if j != i)

    keep = [k for k, face in enumerate(regions) if face != deleted_region]
    return IntMatrix([[full[i][j] for j in keep] for i in keep], ncols=len(keep))


def _candidate_order(colorings: Sequence[Coloring]) -> List[Coloring]:
    # Fewer white regions first; ties go to the coloring containing face 0.
    return sorted(colorings, key=lambda c: (len(c), c.index))


def definite_goeritz(
    diagram: PlanarDiagram,
    faces: Optional[FaceComplex] = None,
) -> GoeritzForm:
    """
    Find a negative-definite Goeritz form for a diagram or its mirror.

    Both colorings are tried as they are, then negated. A negated matrix is
    the Goeritz matrix of the mirror diagram, so it is returned with
    mirror_flag set.

    Args:
        diagram: The diagram
        faces: Its FaceComplex, traced if not given

    Returns:
        GoeritzForm

    Raises:
        DiagramError: If neither coloring gives a definite form
    """
    faces = faces or build_faces(diagram)
    colorings = _candidate_order(checkerboard(diagram, faces))
    for negate in (False, True):
        for coloring in colorings:
            matrix = goeritz_matrix(diagram, coloring)
            if negate:
                matrix = -matrix
            if is_negative_definite(matrix):
                logger.debug(
                    "Using coloring %d (%d white regions)%s",
                    coloring.index, len(coloring), " negated" if negate else "",
                )
                return GoeritzForm(
                    matrix=matrix,
                    mirror_flag=negate,
                    source=GoeritzSource(
                        kind="diagram",
                        coloring=coloring.index,
                        deleted_region=coloring.white_regions[0],
                    ),
                )
    raise DiagramError(
        "No negative-definite Goeritz presentation exists for this diagram or its mirror; "
        "supply a reduced matrix with --goeritz instead"
    )
