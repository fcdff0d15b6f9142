"""Exact index of completely mixed equilibria via local algebras.

The usual entry point is :func:`compute_index_report`, which takes the
translated indifference system of a game (see
:func:`build_indifference_system`) or any square polynomial system with a
root at the origin.
"""

from .elindex import DegreeResult, one_variable_degree, signed_degree
from .enabling import EnablingForm, barycentric, build_vertex_game, corner_simplex
from .errors import InfiniteDimensional, MixedIndexError
from .exactnum import RationalMatrix, inertia
from .gamesys import (Game, GameSystem, build_indifference_system, classify_monogenic,
                      eliminate_inferior_replies, verify_equilibrium)
from .generators import horner_disaggregate, planar_realization
from .localpoly import LocalOrder, Poly, PolySystem, parse_poly
from .oracle import OracleConfig, estimate_degree
from .report import IndexReport, compute_index_report, parity_shortcut
from .standardbasis import build_local_algebra, compute_standard_basis

__version__ = "0.1.0"

__all__ = [
    "DegreeResult", "EnablingForm", "Game", "GameSystem", "IndexReport",
    "InfiniteDimensional", "LocalOrder", "MixedIndexError", "OracleConfig", "Poly",
    "PolySystem", "RationalMatrix", "barycentric", "build_indifference_system",
    "build_local_algebra", "build_vertex_game", "classify_monogenic",
    "compute_index_report", "compute_standard_basis", "eliminate_inferior_replies",
    "estimate_degree", "horner_disaggregate", "inertia", "one_variable_degree",
    "corner_simplex", "parity_shortcut", "parse_poly", "planar_realization",
    "signed_degree", "verify_equilibrium",
]
