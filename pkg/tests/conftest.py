"""
Shared fixtures
"""
import pytest

from src.models import BmInputs, ForecastConfig, SeededStream
from src.processes import make_two_point_dist

# Numerical scenario parameters
MU_D = 20.0
SIGMA_D = 4.0
MU_L = 10.0
SIGMA_L = 5.0


def scenario(rho: float = 0.0, n: int = 5, m: int = 2, **overrides) -> BmInputs:
    values = dict(mu_D=MU_D, sigma_D=SIGMA_D, rho=rho, mu_L=MU_L, sigma_L=SIGMA_L, n=n, m=m)
    values.update(overrides)
    return BmInputs.from_moments(**values)


@pytest.fixture
def base_inputs():
    return scenario()


@pytest.fixture
def two_point():
    return make_two_point_dist(MU_L, SIGMA_L)


@pytest.fixture
def base_cfg(two_point):
    return ForecastConfig(n=5, m=2, L_plus=two_point.L_plus)


@pytest.fixture
def stream():
    return SeededStream(seed=42, stream_id=0)


@pytest.fixture(autouse=True)
def isolated_output(tmp_path, monkeypatch):
    """Keep CSV output and env defaults away from the working tree"""
    monkeypatch.setenv("BULLWHIP_OUTPUT_DIR", str(tmp_path / "output"))
    monkeypatch.delenv("BULLWHIP_SEED", raising=False)
    monkeypatch.delenv("BULLWHIP_WORKERS", raising=False)
