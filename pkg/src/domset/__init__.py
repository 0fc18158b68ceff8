"""Constructive dominating sets for graphs of minimum degree 4 and 5."""

from .discharge import ChargeMap, TerminalReport, assign_charges, verify_terminal
from .generators import GeneratorSpec, generate, named
from .graph import (
    DegreeStats,
    Graph,
    GraphFormatError,
    classical_bounds,
    degree_stats,
    parse_graph,
    serialize_graph,
)
from .oracle import OracleInconclusive, OracleResult, is_dominating, minimum_dominating_set
from .residual import (
    D4,
    D5,
    BlueProfile,
    Color,
    ResidualGraph,
    WeightScheme,
    blue_profile,
    build_residual,
    extend,
    potential,
    score_move,
    white_components,
)
from .rules import (
    Move,
    ProofViolation,
    SolveResult,
    extend_independent_set,
    find_move,
    solve,
)

__all__ = [
    "BlueProfile", "ChargeMap", "Color", "D4", "D5", "DegreeStats", "GeneratorSpec", "Graph",
    "GraphFormatError", "Move", "OracleInconclusive", "OracleResult", "ProofViolation",
    "ResidualGraph", "SolveResult", "TerminalReport", "WeightScheme", "assign_charges",
    "blue_profile", "build_residual", "classical_bounds", "degree_stats", "extend",
    "extend_independent_set", "find_move", "generate", "is_dominating",
    "minimum_dominating_set", "named", "parse_graph", "potential", "score_move",
    "serialize_graph", "solve", "verify_terminal", "white_components",
]
