"""Lexicographic Groebner bases over Q and solution counting."""

from .buchberger import Budgets, MonomialCodec, PolySystem, buchberger_lex, groebner_basis, normal_form
from .fglm import STRATEGIES, fglm, lex_basis
from .solve import (
    MAX_RETRIES,
    RANDOM_BOUND,
    SolveReport,
    eliminant,
    is_shape_position,
    solve_instance,
    solve_system,
    variable_order,
)
from .wronskcheck import WronskianCheck, check_wronskian_orders, solution_parametrization

__all__ = [
    "PolySystem",
    "Budgets",
    "MonomialCodec",
    "buchberger_lex",
    "groebner_basis",
    "lex_basis",
    "fglm",
    "STRATEGIES",
    "normal_form",
    "SolveReport",
    "eliminant",
    "is_shape_position",
    "variable_order",
    "solve_system",
    "solve_instance",
    "MAX_RETRIES",
    "RANDOM_BOUND",
    "WronskianCheck",
    "check_wronskian_orders",
    "solution_parametrization",
]
