"""Diamond-distance estimates and fidelity bounds."""
from src.bounds.diamond import (
    DiamondEstimate,
    GapBound,
    output_trace_distance,
    diamond_lower_estimate,
    diamond_upper_choi,
    kappa,
    diamond_depolarizing_exact,
    fe_lower_bound,
    spectator_gap_bound,
)
from src.bounds.chaining import (
    UpperBoundReport,
    ChainingReport,
    chaining_upper_single,
    chaining_upper_multi,
    check_chaining,
)

__all__ = [
    "DiamondEstimate",
    "GapBound",
    "output_trace_distance",
    "diamond_lower_estimate",
    "diamond_upper_choi",
    "kappa",
    "diamond_depolarizing_exact",
    "fe_lower_bound",
    "spectator_gap_bound",
    "UpperBoundReport",
    "ChainingReport",
    "chaining_upper_single",
    "chaining_upper_multi",
    "check_chaining",
]
