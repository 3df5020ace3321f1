"""Exact Lefschetz polynomials and Nielsen bounds for loop braids."""

from .braidword import BraidWord, Generator, Kind, cycle_decomposition, induced_permutation, parse_word
from .dynamics import lefschetz_report, periodic_bound, trace_power_poly
from .laurent import LaurentPolynomial, VariableMap
from .rep import PolyMatrix, RepKind, burau, rep_of_word, s_matrix

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "Generator", "Kind", "parse_word", "induced_permutation", "cycle_decomposition",
    "LaurentPolynomial", "VariableMap", "PolyMatrix", "RepKind", "rep_of_word", "s_matrix", "burau",
    "lefschetz_report", "periodic_bound", "trace_power_poly",
]
