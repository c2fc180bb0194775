"""CSV emission with diff-stable number formatting."""
from __future__ import annotations

import csv
import io
from dataclasses import astuple
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from src.channels.serialize import write_atomic
from src.core.exceptions import DomainError
from src.utils.logger import get_logger

logger = get_logger("reports")


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise DomainError(f"输出包含非有限值: {value}")
        return "%.10g" % value
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def rows_from_dataclasses(items: Iterable[Any], fields: Sequence[str] | None = None) -> list[tuple]:
    """dataclass 实例 -> 元组；fields 给出时按字段名取值"""
    if fields is None:
        return [astuple(item) for item in items]
    return [tuple(getattr(item, name) for name in fields) for item in items]


def write_csv(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """原子写入 CSV（临时文件 + 重命名）"""
    rows = list(rows)
    out = write_atomic(path, render_csv(header, rows))
    logger.info(f"已写入 {out}（{len(rows)} 行）")
    return out
