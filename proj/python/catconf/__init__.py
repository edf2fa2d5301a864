"""Derivative-matrix ranks and monodromy decomposition counts for ternary forms."""

from ._core import (
    __version__,
    count,
    count_preset_names,
    defectivity_check,
    generic_rank_uniform,
    monomial_count,
    monomial_exponents,
    perfect_case,
    rank,
    rank_preset_report,
)

__all__ = [
    "__version__",
    "count",
    "count_preset_names",
    "defectivity_check",
    "generic_rank_uniform",
    "monomial_count",
    "monomial_exponents",
    "perfect_case",
    "rank",
    "rank_preset_report",
]
