"""Runtime description utilities for recoverybound."""
from __future__ import annotations

import hashlib
import platform
import sys
from pathlib import Path


def describe_runtime() -> dict[str, str]:
    """返回运行环境信息，写入报告以便复现"""
    import numpy
    import scipy

    return {
        "python": sys.version.split()[0],
        "numpy": numpy.__version__,
        "scipy": scipy.__version__,
        "platform": platform.platform(),
        "machine": platform.machine().lower(),
    }


def file_digest(path: Path) -> str:
    """计算输入文件的 SHA-256 摘要"""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
