"""
Correction Term Module
Spin^c structures and exact correction terms of negative-definite forms.
"""

from .search_base import BaseSearch, SearchProblem, SearchResult
from .sphere_decoder import SphereDecoder, ldl_decomposition
from .box_search import BoxSearch
from .spinc import (
    CharSquareMaximum,
    CharVector,
    LatticeContext,
    SpinCStructure,
    canonical_characteristic,
    label_of,
    lattice_context,
    spinc_enumerate,
)
from .correction import (
    CorrectionTerm,
    all_correction_terms,
    box_max_char_square,
    correction_term,
    max_char_square,
)

__all__ = [
    'BaseSearch', 'SearchProblem', 'SearchResult',
    'SphereDecoder', 'ldl_decomposition', 'BoxSearch',
    'CharVector', 'SpinCStructure', 'CharSquareMaximum', 'LatticeContext',
    'lattice_context', 'canonical_characteristic', 'label_of', 'spinc_enumerate',
    'CorrectionTerm', 'max_char_square', 'box_max_char_square',
    'correction_term', 'all_correction_terms',
]
