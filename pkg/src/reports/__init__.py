"""Figure/table data assembly and CSV output."""
from src.reports.figures import (
    FIG3_HEADER,
    FIG4_HEADER,
    FIG5_HEADER,
    Fig5Result,
    TableReport,
    theta_grid,
    incomplete_exact,
    find_crossing,
    fig5_data,
    sdp_fit,
    table_data,
)
from src.reports.writer import format_value, render_csv, rows_from_dataclasses, write_csv

__all__ = [
    "FIG3_HEADER",
    "FIG4_HEADER",
    "FIG5_HEADER",
    "Fig5Result",
    "TableReport",
    "theta_grid",
    "incomplete_exact",
    "find_crossing",
    "fig5_data",
    "sdp_fit",
    "table_data",
    "format_value",
    "render_csv",
    "rows_from_dataclasses",
    "write_csv",
]
