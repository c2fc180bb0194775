"""Seeded random streams shared by the multistart optimizers."""
from __future__ import annotations

import numpy as np


def spawn_generators(seed: int | None, count: int) -> list[np.random.Generator]:
    """为每个起点派生独立的随机数流，结果与调度顺序无关"""
    children = np.random.SeedSequence(0 if seed is None else seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """标准复高斯矩阵"""
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
