import pytest

from hestonfit.charfn import HestonParams
from hestonfit.quadrature import QuadratureConfig


@pytest.fixture
def quad():
    return QuadratureConfig()


@pytest.fixture
def kahl_jackel():
    """Long-dated high-vol-of-vol benchmark parameter set."""
    return HestonParams(v0=0.16, vbar=0.16, a=1.0, eta=2.0, rho=-0.8)


@pytest.fixture
def d1_local_params():
    """Calibrated parameters for the D1 dataset (least-squares run)."""
    return HestonParams(v0=0.0989, vbar=0.3407, a=0.7331, eta=0.7068,
                        rho=-0.2949)


@pytest.fixture
def d1_global_params():
    """Calibrated parameters for the D1 dataset (annealing run)."""
    return HestonParams(v0=0.0983, vbar=0.2957, a=0.9626, eta=0.7544,
                        rho=-0.2919)
