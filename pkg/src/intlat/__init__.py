"""
Integer Lattice Module
Exact integer matrices, Smith normal form and cokernel groups.
"""

from .int_matrix import IntMatrix
from .determinant import adjugate, determinant, is_negative_definite, leading_minors
from .smith import AbelianGroupStructure, SmithDecomposition, cokernel, smith_normal_form
from .mod2 import solve_mod2

__all__ = [
    'IntMatrix', 'determinant', 'adjugate', 'is_negative_definite', 'leading_minors',
    'SmithDecomposition', 'smith_normal_form', 'AbelianGroupStructure', 'cokernel',
    'solve_mod2',
]
