import csv

import numpy as np
import pytest

from src.codes import fe_optimal
from src.core import DomainError, RecoveryOptions
from src.reports import (
    FIG4_HEADER,
    FIG5_HEADER,
    fig5_data,
    find_crossing,
    format_value,
    incomplete_exact,
    render_csv,
    rows_from_dataclasses,
    sdp_fit,
    table_data,
    theta_grid,
    write_csv,
)
from src.multicycle import fig4_data


def test_theta_grid_defaults():
    grid = theta_grid()
    assert grid[0] == pytest.approx(0.005)
    assert grid[-1] == pytest.approx(0.995)
    assert len(grid) == 199
    with_zero = theta_grid(0.005, 0.5, include_zero=True)
    assert with_zero[0] == 0.0 and with_zero[-1] == pytest.approx(0.5)
    assert len(with_zero) == 101
    with pytest.raises(DomainError):
        theta_grid(0.0)


def test_format_value():
    assert format_value(True) == "1"
    assert format_value(np.bool_(False)) == "0"
    assert format_value(3) == "3"
    assert format_value(0.1) == "0.1"
    assert format_value(1 / 3) == "0.3333333333"
    assert format_value("leung") == "leung"
    with pytest.raises(DomainError):
        format_value(float("nan"))


def test_render_csv_is_deterministic():
    rows = [(0.1, 0.95, True), (0.2, 0.9, False)]
    text = render_csv(("theta", "fe", "flag"), rows)
    assert text == "theta,fe,flag\n0.1,0.95,1\n0.2,0.9,0\n"
    assert render_csv(("theta", "fe", "flag"), rows) == text


def test_write_csv_atomic(tmp_path):
    out = write_csv(tmp_path / "nested" / "data.csv", ("a", "b"), [(1, 0.5)])
    assert out.read_text() == "a,b\n1,0.5\n"
    assert [p.name for p in out.parent.iterdir()] == ["data.csv"]


def test_rows_from_dataclasses_uses_header_order():
    rows = fig4_data([0.97], [0.1])
    (row,) = rows_from_dataclasses(rows, FIG4_HEADER)
    assert row[0] == 0.97 and row[1] == 0.1
    assert row[4] == rows[0].advantage_flag
    assert row[5] == rows[0].bound_incomplete_raw


def test_incomplete_exact_endpoints():
    assert incomplete_exact(0.0) == pytest.approx(1.0)
    assert incomplete_exact(0.1) == pytest.approx(fe_optimal(0.1) - 0.021768, abs=1e-6)


def test_find_crossing():
    grid = np.linspace(0.0, 1.0, 11)
    assert find_crossing(lambda t: t - 0.33, grid) == pytest.approx(0.33, abs=1e-10)
    assert find_crossing(lambda t: t - 0.3, grid) == pytest.approx(0.3, abs=1e-10)
    assert find_crossing(lambda t: t + 1.0, grid) is None


def test_fig5_rows_and_crossings():
    result = fig5_data()
    assert len(result.rows) == 101
    first = result.rows[0]
    assert first == pytest.approx((0.0, 1.0, 1.0, 1.0, 1.0))
    theta, leung, adapted, sdp, incomplete = result.rows[20]
    assert theta == pytest.approx(0.1)
    assert leung == pytest.approx(1 - 2.75 * 0.01)
    assert adapted == pytest.approx(0.985513, abs=1e-6)
    assert sdp == pytest.approx(1 - 1.25 * 0.01)
    assert len(FIG5_HEADER) == len(first)
    assert result.crossing_series == pytest.approx(1 / 6, abs=1e-9)
    assert result.crossing_series == pytest.approx(0.17, abs=0.02)
    assert 0.13 <= result.crossing_exact <= 0.19


def test_fig5_rejects_wide_grid():
    with pytest.raises(DomainError):
        fig5_data(np.array([0.1, 0.8]))


def test_table_data_series_and_fits():
    report = table_data()
    payload = report.to_dict()
    names = [s["name"] for s in payload["series"]]
    assert names == ["leung", "channel_adapted", "sdp", "incomplete"]
    leung = payload["series"][0]
    assert leung["label"] == "1−2.75θ²"
    assert leung["coefficients"] == [1.0, 0.0, -2.75]
    fits = {f["name"]: f for f in payload["fits"]}
    assert set(fits) == {"channel_adapted", "incomplete"}
    assert fits["channel_adapted"]["coefficients"][2] == pytest.approx(-1.5, abs=0.05)
    incomplete = fits["incomplete"]["coefficients"]
    assert incomplete[1] == pytest.approx(-0.25, abs=1e-3)
    assert incomplete[2] == pytest.approx(-1.25, abs=0.05)


def test_fig5_csv_file(tmp_path):
    result = fig5_data(theta_grid(0.05, 0.5, include_zero=True))
    out = write_csv(tmp_path / "fig5.csv", FIG5_HEADER, result.rows)
    with out.open(newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == list(FIG5_HEADER)
    assert len(rows) == 12


@pytest.mark.slow
def test_sdp_fit_quadratic_coefficient():
    fit = sdp_fit(opts=RecoveryOptions(starts=4, seed=20240101))
    assert -1.35 <= fit.coefficients[2] <= -1.15
    assert fit.coefficients[0] == pytest.approx(1.0, abs=1e-6)
