"""Spectator-qubit estimation model."""
from src.spectator.model import (
    SpectatorConfig,
    EstimateModel,
    MonteCarloGap,
    Fig3Row,
    f_gamma,
    qfi_spectator,
    qcrb_variance,
    limiting_variance,
    spread_gamma_slope,
    gamma_monotone_domain,
    g_numeric,
    mean_delta_fe,
    sample_estimate,
    monte_carlo_gap,
    fig3_data,
)

__all__ = [
    "SpectatorConfig",
    "EstimateModel",
    "MonteCarloGap",
    "Fig3Row",
    "f_gamma",
    "qfi_spectator",
    "qcrb_variance",
    "limiting_variance",
    "spread_gamma_slope",
    "gamma_monotone_domain",
    "g_numeric",
    "mean_delta_fe",
    "sample_estimate",
    "monte_carlo_gap",
    "fig3_data",
]
