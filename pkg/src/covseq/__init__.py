"""Covering sequences, covering sequence codes and two dimensional covering arrays.

A cyclic binary sequence is an ``(n, R)`` covering sequence when every ``n`` bit word lies
within Hamming distance ``R`` of one of its cyclic windows of width ``n``. The package builds
such sequences (de Bruijn, Hamming and self-dual codes, interleaving, primitive polynomials,
local search), merges codes into single sequences, lifts sequences into arrays, and checks all
of it exhaustively.
"""
from .construct import aligned_square_interleave
from .construct import combine_pair
from .construct import combine_selfdual
from .construct import debruijn
from .construct import debruijn_sequence
from .construct import find_sparse_primitive
from .construct import hamming_csc
from .construct import interleave
from .construct import LfsrStream
from .construct import m_sequence
from .construct import primitive_cs
from .construct import primitive_pair
from .construct import selfdual_base
from .construct import selfdual_code
from .construct import selfdual_step
from .construct import SelfDualCode
from .construct import square_interleave
from .core import ball_volume
from .core import BinaryWord
from .core import complement
from .core import CyclicSequence
from .core import Gf2Poly
from .core import hamming_distance
from .core import minimal_period
from .core import rotate
from .core import SequenceCode
from .core import TorusArray
from .core import windows
from .corpus import corpus_entries
from .corpus import get_entry
from .corpus import table_bounds
from .corpus import verify_corpus
from .exceptions import CovseqError
from .merge import acyclic_extension
from .merge import greedy_merge
from .merge import max_overlap
from .merge import merge_code
from .merge import OverlapGraph
from .merge import reduce_periodic
from .search import search_cs
from .search import SearchConfig
from .twod import debruijn_shift_array
from .twod import fold
from .twod import triangular_shift_array
from .verify import coverage
from .verify import covering_radius
from .verify import CoverageReport
from .verify import is_c2ds
from .verify import is_covering_sequence
from .verify import sphere_covering_bound

__all__ = [
    "BinaryWord",
    "CoverageReport",
    "CovseqError",
    "CyclicSequence",
    "Gf2Poly",
    "LfsrStream",
    "OverlapGraph",
    "SearchConfig",
    "SelfDualCode",
    "SequenceCode",
    "TorusArray",
    "acyclic_extension",
    "aligned_square_interleave",
    "ball_volume",
    "combine_pair",
    "combine_selfdual",
    "complement",
    "corpus_entries",
    "coverage",
    "covering_radius",
    "debruijn",
    "debruijn_sequence",
    "debruijn_shift_array",
    "find_sparse_primitive",
    "fold",
    "get_entry",
    "greedy_merge",
    "hamming_csc",
    "hamming_distance",
    "interleave",
    "is_c2ds",
    "is_covering_sequence",
    "m_sequence",
    "max_overlap",
    "merge_code",
    "minimal_period",
    "primitive_cs",
    "primitive_pair",
    "reduce_periodic",
    "rotate",
    "search_cs",
    "selfdual_base",
    "selfdual_code",
    "selfdual_step",
    "sphere_covering_bound",
    "square_interleave",
    "table_bounds",
    "triangular_shift_array",
    "verify_corpus",
    "windows",
]
