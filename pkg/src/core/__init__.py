"""Core module for recoverybound - constants, config, exceptions, and runtime utilities."""
from src.core.constants import (
    TOL_CPTP,
    TOL_PSD,
    TOL_REPORT,
    PRUNE_TOL,
    DIM_CAP,
    DEFAULT_GRID_STEP,
    FIG3_GAMMAS,
    FIG4_FE_PREV,
)
from src.core.exceptions import (
    RecoveryBoundError,
    DimensionError,
    NotCPTPError,
    StateError,
    DomainError,
    QFIDivergenceError,
    ChannelFormatError,
    ConfigError,
)
from src.core.config import AppConfig, DiamondOptions, RecoveryOptions
from src.core.system import describe_runtime, file_digest

__all__ = [
    "TOL_CPTP",
    "TOL_PSD",
    "TOL_REPORT",
    "PRUNE_TOL",
    "DIM_CAP",
    "DEFAULT_GRID_STEP",
    "FIG3_GAMMAS",
    "FIG4_FE_PREV",
    "RecoveryBoundError",
    "DimensionError",
    "NotCPTPError",
    "StateError",
    "DomainError",
    "QFIDivergenceError",
    "ChannelFormatError",
    "ConfigError",
    "AppConfig",
    "DiamondOptions",
    "RecoveryOptions",
    "describe_runtime",
    "file_digest",
]
