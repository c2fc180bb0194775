"""Figure and table data: recovery-fidelity comparison curves and series fits."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
from scipy.optimize import brentq

from src.codes.ad41 import (
    SERIES,
    SERIES_LABELS,
    SeriesFit,
    evaluate_series,
    fe_optimal,
    fit_series,
    fit_window,
    h_func,
    logical_noise,
)
from src.core.config import RecoveryOptions
from src.core.constants import DEFAULT_GRID_STEP, FIG5_THETA_MAX, SERIES_FIT_WINDOW
from src.core.exceptions import DomainError
from src.recovery.optimizer import optimize_recovery
from src.spectator.model import SpectatorConfig, limiting_variance
from src.utils.logger import get_logger

logger = get_logger("figures")

FIG3_HEADER = ("theta", "gamma", "m", "fe_perfect", "gap", "fe_incomplete")
FIG4_HEADER = ("fe_prev", "theta_n", "bound_perfect", "bound_incomplete", "advantage_flag", "bound_incomplete_raw")
FIG5_HEADER = ("theta", "leung", "channel_adapted", "sdp", "incomplete")


def theta_grid(step: float = DEFAULT_GRID_STEP, upper: float = 1.0 - DEFAULT_GRID_STEP, include_zero: bool = False) -> np.ndarray:
    """等距网格 (0, upper]，include_zero 时包含 0"""
    if step <= 0 or upper <= 0:
        raise DomainError(f"无效的网格参数: step={step}, upper={upper}")
    count = int(round(upper / step))
    grid = np.round(np.arange(0 if include_zero else 1, count + 1) * step, 12)
    return grid[grid <= upper + 1e-12]


def incomplete_exact(theta: float, cfg: SpectatorConfig | None = None) -> float:
    """QCRB 饱和时的不完全知识保真度 fe_optimal − h·Var"""
    cfg = cfg or SpectatorConfig()
    return fe_optimal(theta) - h_func(theta) * limiting_variance(theta, cfg)


def find_crossing(diff: Callable[[float], float], grid: np.ndarray) -> float | None:
    """网格上第一个由负转非负的区间内求根"""
    values = [diff(float(t)) for t in grid]
    for (a, fa), (b, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if fa < 0 <= fb:
            return float(brentq(diff, a, b, xtol=1e-12)) if fb > 0 else float(b)
    return None


@dataclass(frozen=True)
class Fig5Result:
    rows: list[tuple[float, float, float, float, float]]
    crossing_exact: float | None
    crossing_series: float | None


def fig5_data(grid: np.ndarray | None = None) -> Fig5Result:
    """θ ∈ [0, 0.5] 上的四条曲线及不完全知识曲线与 leung 展开的交点"""
    grid = theta_grid(upper=FIG5_THETA_MAX, include_zero=True) if grid is None else np.asarray(grid, float)
    if grid.size == 0 or grid.min() < 0 or grid.max() > FIG5_THETA_MAX + 1e-12:
        raise DomainError(f"fig5 网格必须位于 [0, {FIG5_THETA_MAX}] 内")
    rows = [
        (
            float(t),
            float(evaluate_series("leung", t)),
            fe_optimal(t),
            float(evaluate_series("sdp", t)),
            incomplete_exact(t),
        )
        for t in grid
    ]
    interior = grid[grid > 0]
    crossing_exact = find_crossing(
        lambda t: incomplete_exact(t) - float(evaluate_series("leung", t)), interior
    )
    crossing_series = find_crossing(
        lambda t: float(evaluate_series("incomplete", t) - evaluate_series("leung", t)), interior
    )
    logger.info(f"交点: 精确曲线 θ={crossing_exact}, 展开式 θ={crossing_series}")
    return Fig5Result(rows, crossing_exact, crossing_series)


@dataclass
class TableReport:
    series: list[dict[str, Any]] = field(default_factory=list)
    fits: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"series": self.series, "fits": self.fits}


def _fit_entry(name: str, fit: SeriesFit) -> dict[str, Any]:
    return {
        "name": name,
        "window": list(fit.window),
        "coefficients": list(fit.coefficients),
        "residual": fit.residual,
    }


def sdp_fit(points: int = 6, opts: RecoveryOptions | None = None) -> SeriesFit:
    """数值最优恢复在拟合窗口上的保真度拟合"""
    thetas = np.linspace(0.0, SERIES_FIT_WINDOW, points)
    values = [optimize_recovery(logical_noise(float(t)), opts).fe_achieved for t in thetas]
    return fit_series(thetas, np.array(values))


def table_data(with_sdp: bool = False, opts: RecoveryOptions | None = None) -> TableReport:
    report = TableReport()
    for name, coeffs in SERIES.items():
        report.series.append({"name": name, "label": SERIES_LABELS[name], "coefficients": list(coeffs)})

    window = fit_window()
    report.fits.append(_fit_entry("channel_adapted", fit_series(window, [fe_optimal(t) for t in window])))
    report.fits.append(_fit_entry("incomplete", fit_series(window, [incomplete_exact(t) for t in window])))
    if with_sdp:
        report.fits.append(_fit_entry("sdp", sdp_fit(opts=opts)))
    return report
