"""Shortlex order versus A_alpha spectral radius for graphs with pendant paths."""

from .partition import Partition, enumerate_partitions, shortlex_cmp, classify_consecutive
from .wgraph import RootedGraph, WeightedGraph, attach_paths, a_alpha_matrix
from .charpoly import Poly, f_poly, phi_path, char_poly_oracle
from .spectra import radius_symmetric, radius_power, theta
from .verify import verify_main_theorem, verify_quostarlik, verify_fig1

__all__ = [
    "Partition",
    "enumerate_partitions",
    "shortlex_cmp",
    "classify_consecutive",
    "RootedGraph",
    "WeightedGraph",
    "attach_paths",
    "a_alpha_matrix",
    "Poly",
    "f_poly",
    "phi_path",
    "char_poly_oracle",
    "radius_symmetric",
    "radius_power",
    "theta",
    "verify_main_theorem",
    "verify_quostarlik",
    "verify_fig1",
]

__version__ = "0.1.0"
