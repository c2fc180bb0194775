"""Registry and runner for the executable property checks."""
from __future__ import annotations

import fnmatch
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from src.core.constants import TOL_REPORT
from src.utils.logger import get_logger

logger = get_logger("verify")


@dataclass(frozen=True)
class CheckRecord:
    """lhs ≤ rhs 形式的不等式；margin = rhs − lhs"""
    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    detail: str = ""

    @classmethod
    def at_most(cls, name: str, lhs: float, rhs: float, detail: str = "") -> "CheckRecord":
        margin = float(rhs) - float(lhs)
        return cls(name, float(lhs), float(rhs), margin, bool(margin >= 0), detail)

    @classmethod
    def worst(cls, name: str, pairs: list[tuple[float, float]], detail: str = "") -> "CheckRecord":
        """多组 (lhs, rhs) 中余量最小的一组"""
        lhs, rhs = min(pairs, key=lambda p: p[1] - p[0])
        return cls.at_most(name, lhs, rhs, f"{detail}，共 {len(pairs)} 组".lstrip("，"))


@dataclass(frozen=True)
class VerifyContext:
    seed: int
    quick: bool = False

    def count(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def rng(self, name: str) -> np.random.Generator:
        """每个检查独立的随机流，与运行顺序无关"""
        salt = sum(ord(c) * (i + 1) for i, c in enumerate(name))
        return np.random.default_rng([self.seed, salt])


CheckFunc = Callable[[VerifyContext], list[CheckRecord]]


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    func: CheckFunc


_REGISTRY: dict[str, Check] = {}


def check(name: str, description: str) -> Callable[[CheckFunc], CheckFunc]:
    """注册一个检查函数"""

    def decorator(func: CheckFunc) -> CheckFunc:
        if name in _REGISTRY:
            raise ValueError(f"重复注册的检查: {name}")
        _REGISTRY[name] = Check(name, description, func)
        return func

    return decorator


def registered_checks(pattern: str | None = None) -> list[Check]:
    checks = list(_REGISTRY.values())
    if not pattern:
        return checks
    glob = pattern if any(c in pattern for c in "*?[") else f"*{pattern}*"
    return [c for c in checks if fnmatch.fnmatch(c.name, glob)]


@dataclass
class VerifyReport:
    seed: int
    quick: bool
    records: list[CheckRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.holds]

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "quick": self.quick,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [asdict(r) for r in self.records],
        }


def run_suite(seed: int, pattern: str | None = None, quick: bool = False) -> VerifyReport:
    ctx = VerifyContext(seed=seed, quick=quick)
    report = VerifyReport(seed=seed, quick=quick)
    start = time.perf_counter()
    for item in registered_checks(pattern):
        t0 = time.perf_counter()
        try:
            records = item.func(ctx)
        except Exception as e:
            logger.exception(f"检查 {item.name} 执行失败")
            records = [CheckRecord(item.name, float("nan"), float("nan"), float("nan"), False, f"异常: {e}")]
        for r in records:
            if r.holds:
                logger.info(f"✓ {r.name}（余量 {r.margin:.3e}，{time.perf_counter() - t0:.2f}s）")
            else:
                logger.warning(f"✗ {r.name}: lhs={r.lhs:.10g} rhs={r.rhs:.10g} {r.detail}")
        report.records.extend(records)
    report.elapsed = time.perf_counter() - start
    return report


def tolerance_record(name: str, error: float, tol: float = TOL_REPORT, detail: str = "") -> CheckRecord:
    """|误差| ≤ tol 形式的等式检查"""
    return CheckRecord.at_most(name, abs(error), tol, detail)
