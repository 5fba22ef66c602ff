"""
Diagram Module
Planar diagram codes, checkerboard surfaces and Goeritz forms.
"""

from .planar_diagram import PlanarDiagram, mirror, parse_pd
from .faces import FaceComplex, build_faces
from .coloring import Coloring, checkerboard
from .goeritz import GoeritzForm, GoeritzSource, definite_goeritz, goeritz_matrix
from .plumbing import continued_fraction, montesinos_plumbing, star_plumbing

__all__ = [
    'PlanarDiagram', 'parse_pd', 'mirror',
    'FaceComplex', 'build_faces',
    'Coloring', 'checkerboard',
    'GoeritzForm', 'GoeritzSource', 'goeritz_matrix', 'definite_goeritz',
    'continued_fraction', 'star_plumbing', 'montesinos_plumbing',
]
