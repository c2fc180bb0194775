"""Channel JSON encoding: {"d_in", "d_out", "kraus": [[[re, im], ...], ...]}."""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any

import numpy as np

from src.channels.channel import QuantumChannel
from src.core.exceptions import ChannelFormatError, DimensionError, RecoveryBoundError
from src.utils.logger import get_logger

logger = get_logger("serialize")


def matrix_to_json(m: np.ndarray) -> list[list[list[float]]]:
    """复矩阵 -> 行列表，每个元素为 [re, im]"""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, dtype=complex)]


def matrix_from_json(data: Any) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise ChannelFormatError(f"矩阵元素无法解析: {e}") from e
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ChannelFormatError(f"矩阵编码形状 {arr.shape} 无效，需要 rows×cols×2")
    if not np.all(np.isfinite(arr)):
        raise ChannelFormatError("矩阵元素包含 NaN 或 Inf")
    return arr[..., 0] + 1j * arr[..., 1]


def channel_to_json(ch: QuantumChannel) -> dict[str, Any]:
    return {
        "d_in": ch.d_in,
        "d_out": ch.d_out,
        "kraus": [matrix_to_json(k) for k in ch.kraus],
    }


def channel_from_json(data: Any, validate: bool = True) -> QuantumChannel:
    """解析信道 JSON；格式错误抛 ChannelFormatError，维度/CPTP 错误原样抛出"""
    if not isinstance(data, dict):
        raise ChannelFormatError("信道 JSON 顶层必须是对象")
    missing = {"d_in", "d_out", "kraus"} - data.keys()
    if missing:
        raise ChannelFormatError(f"信道 JSON 缺少字段: {', '.join(sorted(missing))}")
    d_in, d_out = data["d_in"], data["d_out"]
    if not isinstance(d_in, int) or not isinstance(d_out, int) or isinstance(d_in, bool):
        raise ChannelFormatError("d_in/d_out 必须为整数")
    if not isinstance(data["kraus"], list) or not data["kraus"]:
        raise ChannelFormatError("kraus 必须为非空列表")

    ops = [matrix_from_json(k) for k in data["kraus"]]
    for k in ops:
        if k.shape != (d_out, d_in):
            raise DimensionError(f"Kraus 算子形状 {k.shape} 与声明的 {d_out}x{d_in} 不符")
    if validate:
        return QuantumChannel.from_kraus(ops)
    return QuantumChannel(d_in, d_out, tuple(ops))


def load_channel(path: Path | str, validate: bool = True) -> QuantumChannel:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ChannelFormatError(f"{path.name}: JSON 解析失败: {e}") from e
    except OSError as e:
        raise ChannelFormatError(f"无法读取 {path}: {e}") from e
    try:
        ch = channel_from_json(data, validate=validate)
    except RecoveryBoundError as e:
        e.args = (f"{path.name}: {e}",)
        raise
    logger.debug(f"已加载信道 {path.name}: {ch.d_in}->{ch.d_out}, {ch.kraus_count} 个 Kraus 算子")
    return ch


def write_atomic(path: Path | str, text: str) -> Path:
    """临时文件 + 重命名，避免留下半写的输出"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def save_channel(ch: QuantumChannel, path: Path | str) -> Path:
    out = write_atomic(path, json.dumps(channel_to_json(ch), indent=2) + "\n")
    logger.info(f"信道已写入 {out}")
    return out
