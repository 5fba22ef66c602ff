"""
Face tracing for planar diagrams.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..utils.errors import DiagramError
from .planar_diagram import PlanarDiagram, Slot

logger = logging.getLogger(__name__)

Corner = Tuple[int, int]


@dataclass(frozen=True)
class FaceComplex:
    """
    Faces of a diagram as cycles of crossing corners.

    Corner (c, i) is the wedge of crossing c between slots i and i + 1.
    Faces are numbered in order of discovery while scanning corners
    lexicographically.

    Attributes:
        faces: For each face, its corners in traversal order
        corner_face: Face index of every corner
    """

    faces: Tuple[Tuple[Corner, ...], ...]
    corner_face: Dict[Corner, int]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_at(self, crossing: int, corner: int) -> int:
        return self.corner_face[(crossing, corner)]


def _next_corner(partner: Dict[Slot, Slot], corner: Corner) -> Corner:
    # Leaving along the edge in slot i, the same face continues just before
    # the slot where that edge arrives.
    c, i = corner
    other_c, j = partner[(c, i)]
    return (other_c, (j - 1) % 4)


def build_faces(diagram: PlanarDiagram) -> FaceComplex:
    """
    Trace the faces of a connected diagram.

    Args:
        diagram: Validated PlanarDiagram

    Returns:
        FaceComplex with exactly crossing_count + 2 faces

    Raises:
        DiagramError: If the face count violates Euler's formula
    """
    n = diagram.crossing_count
    if n == 0:
        return FaceComplex(faces=((), ()), corner_face={})

    partner = diagram.partner()
    corner_face = {}
    faces = []
    for c in range(n):
        for i in range(4):
            if (c, i) in corner_face:
                continue
            index = len(faces)
            cycle = []
            corner = (c, i)
            while corner not in corner_face:
                corner_face[corner] = index
                cycle.append(corner)
                corner = _next_corner(partner, corner)
            if corner != (c, i):
                raise DiagramError(f"Face tracing from corner {(c, i)} did not close up")
            faces.append(tuple(cycle))

    if len(faces) != n + 2:
        raise DiagramError(
            f"Diagram with {n} crossings has {len(faces)} faces, expected {n + 2}; "
            "the PD code is not planar"
        )
    logger.debug("Traced %d faces for %d crossings", len(faces), n)
    return FaceComplex(faces=tuple(faces), corner_face=corner_face)
