"""
Obstruction Module
D invariants and the finite-concordance-order obstruction.
"""

from .primes import PrimePowerSpec, factorize, max_exponent
from .invariants import D_invariant, subgroup_coset
from .report import (
    DValue,
    ObstructionReport,
    Verdict,
    obstruction,
    verify_expected,
)

__all__ = [
    'PrimePowerSpec', 'factorize', 'max_exponent',
    'subgroup_coset', 'D_invariant',
    'DValue', 'ObstructionReport', 'Verdict', 'obstruction',
    'verify_expected',
]
