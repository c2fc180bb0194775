import numpy as np
import pytest

from src.channels import amplitude_damping, depolarizing, random_channel


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def ad_channel():
    return amplitude_damping(0.1)


@pytest.fixture
def depol_pair():
    return depolarizing(2, 0.1), depolarizing(2, 0.3)


@pytest.fixture
def random_qubit_channels():
    return [random_channel(2, 2, k, seed=s) for s, k in enumerate((1, 2, 3, 4))]


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    """测试不读取工作目录下的 .env，也不写入仓库"""
    for name in ("SEED", "LOG_LEVEL", "WORKERS", "DIM_CAP", "OUTPUT_DIR"):
        monkeypatch.delenv(f"RECOVERYBOUND_{name}", raising=False)
    monkeypatch.chdir(tmp_path)
