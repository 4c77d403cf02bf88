import numpy as np
import pytest
from hypothesis import settings

from harmonic_koebe import DilatationSpec, HarmonicMap, PowerSeries
from harmonic_koebe.shear import koebe_series, monomial_dilatation, shear

# property tests must not flake between runs
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def identity_map() -> HarmonicMap:
    return HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.0]))


def build_koebe_shear(k: float, m: int, order: int) -> HarmonicMap:
    spec = DilatationSpec(k=k, m=float(m))
    return shear(koebe_series(order), monomial_dilatation(spec, m), order)


@pytest.fixture(scope="session")
def kh_map_n20() -> HarmonicMap:
    return build_koebe_shear(1.0, 1, 20)


@pytest.fixture(scope="session")
def kh_map_n128() -> HarmonicMap:
    return build_koebe_shear(1.0, 1, 128)


@pytest.fixture(scope="session")
def kh2_map_n128() -> HarmonicMap:
    return build_koebe_shear(1.0, 2, 128)


def agreement_grid(n_radial: int = 10, n_angular: int = 10, r_max: float = 0.8) -> np.ndarray:
    radii = np.linspace(r_max / n_radial, r_max, n_radial)
    angles = 2.0 * np.pi * np.arange(n_angular) / n_angular
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
