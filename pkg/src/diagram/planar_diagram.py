"""
Planar diagram (PD) codes.

A PD code lists one 4-tuple of edge labels per crossing, read
counterclockwise starting from the incoming under-strand.
"""

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from ..utils.errors import DiagramError, PDParseError

Slot = Tuple[int, int]


@dataclass(frozen=True)
class PlanarDiagram:
    """
    A validated PD code of a connected knot diagram.

    Attributes:
        crossings: One (a, b, c, d) tuple per crossing
    """

    crossings: Tuple[Tuple[int, int, int, int], ...]

    def __post_init__(self):
        _validate_crossings(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def edge_slots(self) -> Dict[int, List[Slot]]:
        """Map each edge label to its two (crossing, slot) occurrences."""
        slots = defaultdict(list)
        for c, crossing in enumerate(self.crossings):
            for i, label in enumerate(crossing):
                slots[label].append((c, i))
        return dict(slots)

    def partner(self) -> Dict[Slot, Slot]:
        """Map each (crossing, slot) to the other end of its edge."""
        result = {}
        for ends in self.edge_slots().values():
            first, second = ends
            result[first] = second
            result[second] = first
        return result

    def to_list(self) -> List[List[int]]:
        return [list(crossing) for crossing in self.crossings]

    def __str__(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))


def _validate_crossings(crossings: Sequence[Sequence[int]]) -> None:
    for crossing in crossings:
        if len(crossing) != 4:
            raise PDParseError(f"Crossing {list(crossing)} must have exactly 4 labels")
        for label in crossing:
            if isinstance(label, bool) or not isinstance(label, int) or label < 1:
                raise PDParseError(f"Edge labels must be positive integers, got {label!r}")
    n = len(crossings)
    counts = Counter(label for crossing in crossings for label in crossing)
    bad = sorted(label for label, k in counts.items() if k != 2)
    if bad:
        raise PDParseError(f"Edge label {bad[0]} appears {counts[bad[0]]} times; every label must appear exactly twice")
    if set(counts) != set(range(1, 2 * n + 1)):
        raise PDParseError(f"Edge labels must be exactly 1..{2 * n}, got {sorted(counts)}")

    # Connectivity of the crossing graph; a split diagram has no single checkerboard surface.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owners = defaultdict(list)
    for c, crossing in enumerate(crossings):
        for label in crossing:
            owners[label].append(c)
    for a, b in owners.values():
        parent[find(a)] = find(b)
    if len({find(c) for c in range(n)}) > 1:
        raise DiagramError("Diagram is split: its crossings form more than one connected piece")


def parse_pd(text: Union[str, Sequence[Sequence[int]]]) -> PlanarDiagram:
    """
    Parse a PD code given as a JSON-style list of 4-tuples.

    Args:
        text: String such as "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]" or a decoded list

    Returns:
        PlanarDiagram

    Raises:
        PDParseError: On malformed syntax or label errors
        DiagramError: If the diagram is split
    """
    if isinstance(text, str):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PDParseError(f"Malformed PD code: {e.msg} at position {e.pos}") from e
    else:
        data = text
    if not isinstance(data, (list, tuple)):
        raise PDParseError(f"PD code must be a list of crossings, got {type(data).__name__}")
    for crossing in data:
        if not isinstance(crossing, (list, tuple)):
            raise PDParseError(f"Crossing must be a list of 4 labels, got {crossing!r}")
    return PlanarDiagram(tuple(tuple(crossing) for crossing in data))


def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """
    Planar reflection of a diagram.

    Reversing the cyclic order of every crossing reflects the diagram in the
    plane, which turns the knot into its mirror image.
    """
    return PlanarDiagram(tuple((a, d, c, b) for a, b, c, d in diagram.crossings))
