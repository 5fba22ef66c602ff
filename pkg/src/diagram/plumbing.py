"""
Star-shaped plumbing matrices.

The double branched cover of a Montesinos knot is a Seifert fibred space
bounding a star-shaped plumbing of disk bundles over spheres. When the
central weight is negative enough the plumbing is negative definite and its
intersection form can be fed straight into the correction-term pipeline,
which covers non-alternating Montesinos knots that have no definite Goeritz
matrix.
"""

import math
from fractions import Fraction
from typing import List, Sequence, Union

from ..intlat import IntMatrix
from ..utils.errors import MatrixError


def continued_fraction(ratio: Union[Fraction, int, str]) -> List[int]:
    """
    Expand ratio = a_1 - 1/(a_2 - 1/(... - 1/a_k)) with every a_i >= 2.

    Args:
        ratio: Rational number greater than 1

    Returns:
        The coefficients [a_1, ..., a_k]
    """
    r = Fraction(ratio)
    if r <= 1:
        raise MatrixError(f"Leg ratio must exceed 1, got {r}")
    coefficients = []
    while r.denominator != 1:
        a = math.ceil(r)
        coefficients.append(a)
        r = 1 / (a - r)
    coefficients.append(int(r))
    return coefficients


def star_plumbing(central_weight: int, legs: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Intersection form of a star-shaped plumbing.

    Vertex 0 is the central sphere; each leg is a chain attached to it.

    Args:
        central_weight: Self-intersection of the central sphere
        legs: For each leg, the self-intersections along the chain, starting
            next to the centre

    Returns:
        Symmetric IntMatrix, vertices ordered centre first then leg by leg
    """
    size = 1 + sum(len(leg) for leg in legs)
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = central_weight
    k = 1
    for leg in legs:
        previous = 0
        for weight in leg:
            rows[k][k] = weight
            rows[k][previous] = rows[previous][k] = 1
            previous = k
            k += 1
    return IntMatrix(rows)


def montesinos_plumbing(
    central_weight: int,
    ratios: Sequence[Union[Fraction, int, str]],
) -> IntMatrix:
    """
    Star plumbing whose legs are the continued fractions of the given ratios.

    Args:
        central_weight: Self-intersection of the central sphere
        ratios: One rational > 1 per exceptional fibre

    Returns:
        The plumbing matrix with leg weights -a_i
    """
    legs = [[-a for a in continued_fraction(r)] for r in ratios]
    return star_plumbing(central_weight, legs)
