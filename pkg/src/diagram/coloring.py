"""
Checkerboard colorings of diagram faces.
"""

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from ..utils.errors import DiagramError
from .faces import FaceComplex
from .planar_diagram import PlanarDiagram


@dataclass(frozen=True)
class Coloring:
    """
    One of the two checkerboard colorings of a diagram.

    Attributes:
        index: 0 for the coloring with face 0 white, 1 for its complement
        white: Indices of the white faces
        eta: Per-crossing sign, +1 when the white faces sit at corners 0 and 2
        white_pairs: For each crossing, the two white faces meeting there
    """

    index: int
    white: FrozenSet[int]
    eta: Tuple[int, ...]
    white_pairs: Tuple[Tuple[int, int], ...]

    @property
    def white_regions(self) -> Tuple[int, ...]:
        return tuple(sorted(self.white))

    def __len__(self) -> int:
        return len(self.white)


def _face_colors(diagram: PlanarDiagram, faces: FaceComplex) -> List[int]:
    """2-color the faces so that faces meeting along an edge differ."""
    same, differ = [], []
    for c in range(diagram.crossing_count):
        f = [faces.face_at(c, i) for i in range(4)]
        same += [(f[0], f[2]), (f[1], f[3])]
        differ += [(f[0], f[1]), (f[1], f[2]), (f[2], f[3]), (f[3], f[0])]

    neighbours = [[] for _ in range(faces.face_count)]
    for a, b in same:
        neighbours[a].append((b, 0))
        neighbours[b].append((a, 0))
    for a, b in differ:
        neighbours[a].append((b, 1))
        neighbours[b].append((a, 1))

    colors = [None] * faces.face_count
    colors[0] = 0
    queue = deque([0])
    while queue:
        face = queue.popleft()
        for other, flip in neighbours[face]:
            expected = colors[face] ^ flip
            if colors[other] is None:
                colors[other] = expected
                queue.append(other)
            elif colors[other] != expected:
                raise DiagramError(f"Faces {face} and {other} cannot be checkerboard colored")
    # Only the crossingless diagram leaves a face unreached.
    return [1 if color is None else color for color in colors]


def checkerboard(diagram: PlanarDiagram, faces: FaceComplex) -> Tuple[Coloring, Coloring]:
    """
    Produce both checkerboard colorings with their crossing signs.

    Args:
        diagram: Validated PlanarDiagram
        faces: Its FaceComplex

    Returns:
        (coloring with face 0 white, complementary coloring)
    """
    colors = _face_colors(diagram, faces)
    result = []
    for index in (0, 1):
        white = frozenset(f for f, color in enumerate(colors) if color == index)
        eta, pairs = [], []
        for c in range(diagram.crossing_count):
            if faces.face_at(c, 0) in white:
                eta.append(1)
                pairs.append((faces.face_at(c, 0), faces.face_at(c, 2)))
            else:
                eta.append(-1)
                pairs.append((faces.face_at(c, 1), faces.face_at(c, 3)))
        result.append(Coloring(index=index, white=white, eta=tuple(eta), white_pairs=tuple(pairs)))
    return result[0], result[1]
