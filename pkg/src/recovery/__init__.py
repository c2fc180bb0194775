"""Numerical optimal-recovery search."""
from src.recovery.optimizer import (
    RecoverySolution,
    RecoveryProblem,
    optimize_recovery,
    recovery_for_estimate,
)

__all__ = [
    "RecoverySolution",
    "RecoveryProblem",
    "optimize_recovery",
    "recovery_for_estimate",
]
