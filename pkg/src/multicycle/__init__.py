"""Multi-cycle recurrence bounds."""
from src.multicycle.recurrence import (
    CycleTrace,
    BoundSeries,
    CompositeReport,
    Fig4Row,
    recurrence_upper,
    composite_chi00_check,
    delta_shift,
    spectator_multicycle_term,
    fig4_data,
    iterate_fidelity_bounds,
    iterate_bounds,
)

__all__ = [
    "CycleTrace",
    "BoundSeries",
    "CompositeReport",
    "Fig4Row",
    "recurrence_upper",
    "composite_chi00_check",
    "delta_shift",
    "spectator_multicycle_term",
    "fig4_data",
    "iterate_fidelity_bounds",
    "iterate_bounds",
]
