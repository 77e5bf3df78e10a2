"""Zarankiewicz bounds, exact small values, finite-field extremal graphs and certificates."""

from .bounds import (
    BoundFamily,
    BoundReport,
    RegionReport,
    SpectralBoundReport,
    SpectralFamily,
    ZInstance,
    all_bounds,
    babai_guiduli_main_term,
    best_k,
    dominance_scan,
    edge_bound,
    furedi_bound,
    generic_bound,
    kst_bound,
    spectral_bound_generic,
    spectral_bound_t2,
)
from .constructions import brown_graph, friendship_graph, norm_graph, paley_graph, polarity_graph
from .errors import ConstructionError, DomainError, GraphFormatError, TooLargeError
from .field import FieldElem, FiniteField, field_make, field_of_order
from .graph import Graph
from .graphio import parse_graph, read_graph, write_graph
from .spectral import CertReport, SrgProfile, certify, find_kst, kst_free, spectral_radius, srg_profile
from .zexact import (
    BitMatrix,
    SolveResult,
    Status,
    contains_all_ones_submatrix,
    find_all_ones_submatrix,
    zarankiewicz_exact,
    zarankiewicz_naive,
)

__version__ = "0.1.0"
