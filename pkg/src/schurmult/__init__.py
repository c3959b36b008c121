"""Schur multipliers and the invariant t(A) of nilpotent associative algebras."""

from .algebra import (
    Algebra,
    Subspace,
    abelian,
    center,
    central_sum,
    check_associativity,
    derived_ideal,
    direct_sum,
    is_nilpotent,
    power_chain,
    quotient,
    split_central_complement,
)
from .multiplier import cover_table, multiplier_dim, t_value, verify_cover_consistency
from .theorems import classify, verify_main_theorem

__all__ = [
    "Algebra",
    "Subspace",
    "abelian",
    "center",
    "central_sum",
    "check_associativity",
    "classify",
    "cover_table",
    "derived_ideal",
    "direct_sum",
    "is_nilpotent",
    "multiplier_dim",
    "power_chain",
    "quotient",
    "split_central_complement",
    "t_value",
    "verify_cover_consistency",
    "verify_main_theorem",
]
