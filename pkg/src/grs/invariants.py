"""
D invariants: sums of correction terms over prime-power subgroups.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from sympy import multiplicity

from ..diagram.goeritz import GoeritzForm
from ..dinv import CorrectionTerm, all_correction_terms, lattice_context
from ..intlat import AbelianGroupStructure
from ..intlat.smith import Label
from ..utils.errors import GroupError
from .primes import PrimePowerSpec, max_exponent


def subgroup_coset(group: AbelianGroupStructure, q: int) -> List[Label]:
    """
    Labels of the unique order-q subgroup of a cyclic group.

    In Z/N these are the q multiples of N/q, i.e. the h with q*h = 0 mod N.
    Because the canonical structure has label 0, this is also the coset
    s_0 + G_q.

    Args:
        group: Cyclic AbelianGroupStructure of order N
        q: Divisor of N

    Returns:
        The q labels in increasing order

    Raises:
        GroupError: If the group is not cyclic or q does not divide N
    """
    if not group.is_cyclic:
        raise GroupError(
            f"Group with invariant factors {group.invariant_factors} is not cyclic"
        )
    n = group.order
    if q < 1 or n % q != 0:
        raise GroupError(f"{q} does not divide the group order {n}")
    if n == 1:
        return [group.zero]
    generator = group.scale(n // q, (1,))
    labels = [group.zero]
    while len(labels) < q:
        labels.append(group.add(labels[-1], generator))
    return labels


def D_invariant(
    form: GoeritzForm,
    spec: PrimePowerSpec,
    d_table: Optional[Dict[Label, CorrectionTerm]] = None,
) -> Fraction:
    """
    Sum of correction terms over s_0 + G_q for q = p^e.

    Args:
        form: Knot form with cyclic cokernel
        spec: The prime power
        d_table: Precomputed all_correction_terms(form), if available

    Returns:
        D_q as an exact rational

    Raises:
        GroupError: If the cokernel is not cyclic, q does not divide det, or
            e lies outside the range allowed by the multiplicity of p
    """
    group = lattice_context(form).group
    if form.order % spec.q != 0:
        raise GroupError(f"{spec.p}^{spec.e} does not divide det {form.order}")
    if spec.p > 1:
        m = int(multiplicity(spec.p, form.order))
        if spec.m is not None and spec.m != m:
            raise GroupError(f"{spec.p} has multiplicity {m} in det {form.order}, not {spec.m}")
        if spec.e > max_exponent(m):
            raise GroupError(f"Exponent {spec.e} outside the range 0..{max_exponent(m)} for {spec.p}^{m}")
    table = d_table if d_table is not None else all_correction_terms(form)
    return sum((table[h].value for h in subgroup_coset(group, spec.q)), Fraction(0))
