import math

import numpy as np
import pytest
from scipy.integrate import quad

from harmonic_koebe import (
    DilatationSpec,
    DomainError,
    annulus_modulus,
    koebe_lower_bound,
    radial_modulus_integral,
    slit_map_check,
    slit_modulus_asymptotic,
    modulus_chain_check,
)


# -- annulus modulus -----------------------------------------------------------

def test_annulus_unit_modulus():
    assert annulus_modulus(1.0, math.e ** (2.0 * math.pi)) == pytest.approx(1.0)


def test_annulus_requires_proper_ring():
    with pytest.raises(DomainError):
        annulus_modulus(1.0, 1.0)
    with pytest.raises(DomainError):
        annulus_modulus(-1.0, 2.0)


def test_annulus_value():
    assert annulus_modulus(0.01, 1.0) == pytest.approx(math.log(100.0) / (2.0 * math.pi))


# -- radial integral -----------------------------------------------------------------

def test_radial_modulus_integral_pure_logarithm():
    chk = radial_modulus_integral(0.01, 1.0, 0.0, 1.0)
    assert chk.closed_form == pytest.approx(-math.log(0.01))
    assert chk.residual <= 1e-10


def test_radial_modulus_integral_k1_m1():
    assert radial_modulus_integral(0.01, 1.0, 1.0, 1.0).residual <= 1e-8


def test_radial_modulus_integral_fractional_amplitude():
    chk = radial_modulus_integral(0.01, 1.0, 0.5 ** 3, 3.0)
    expect = (2.0 / 3.0) * math.log((1.0 + 0.125e-6) / 1.125) - math.log(0.01)
    assert chk.closed_form == pytest.approx(expect, abs=1e-12)
    assert chk.residual <= 1e-8


def test_radial_modulus_integral_against_scipy():
    k_amp, m = 0.8, 2.0
    chk = radial_modulus_integral(0.05, 1.0, k_amp, m)
    ref, _ = quad(lambda t: (1 - k_amp * t ** m) / ((1 + k_amp * t ** m) * t), 0.05, 1.0)
    assert chk.numeric == pytest.approx(ref, abs=1e-9)


def test_radial_modulus_integral_grid():
    worst = 0.0
    for t0 in (0.01, 0.05, 0.1, 0.3, 0.5):
        for k_amp in (0.0, 0.125, 0.5, 0.8, 1.0):
            for m in (1.0, 2.0, 3.0, 4.0):
                worst = max(worst, radial_modulus_integral(t0, 1.0, k_amp, m).residual)
    assert worst <= 1e-8


def test_radial_modulus_integral_domain():
    with pytest.raises(DomainError):
        radial_modulus_integral(0.5, 0.1, 1.0, 1.0)
    with pytest.raises(DomainError):
        radial_modulus_integral(0.0, 1.0, 1.0, 1.0)


# -- slit modulus -----------------------------------------------------------------------

def test_slit_modulus_unit():
    delta = 0.25
    eps = 4.0 * delta * math.exp(-2.0 * math.pi)
    assert slit_modulus_asymptotic(delta, eps) == pytest.approx(1.0)


def test_slit_modulus_value():
    got = slit_modulus_asymptotic(1.0 / 6.0, 1e-4)
    assert got == pytest.approx(math.log(4.0 / 6.0 / 1e-4) / (2.0 * math.pi))
    # ln(6666.67) / (2 pi), recomputed by hand: 8.80488 / 6.28319
    assert got == pytest.approx(1.40134, abs=1e-4)


def test_slit_modulus_matches_annulus():
    delta, eps = 1.0 / 6.0, 1e-4
    assert slit_modulus_asymptotic(delta, eps) == annulus_modulus(eps, 4.0 * delta)


def test_slit_modulus_domain():
    with pytest.raises(DomainError):
        slit_modulus_asymptotic(0.1, 0.2)


# -- slit map -------------------------------------------------------------------------------

def test_slit_map_tip():
    # psi(-1) = 4*delta*K(-1) = -delta, the tip of the slit
    z = -1.0
    psi = 4.0 * 1.0 * z / (1.0 - z) ** 2
    assert psi == pytest.approx(-1.0)


def test_slit_map_quarter_turn():
    delta = 0.7
    z = 1j
    psi = 4.0 * delta * z / (1.0 - z) ** 2
    assert psi.real == pytest.approx(-2.0 * delta)
    assert abs(psi.imag) <= 1e-12


def test_slit_map_check_passes():
    for delta in (0.25, 1.0, 3.0):
        report = slit_map_check(delta, 256)
        assert report.passed
        assert report.measured <= 1e-10


def test_slit_map_check_matches_sine_identity():
    delta, n = 1.5, 128
    thetas = 2.0 * np.pi * np.arange(1, n) / n
    z = np.exp(1j * thetas)
    psi = 4.0 * delta * z / (1.0 - z) ** 2
    expect = -delta / np.sin(thetas / 2.0) ** 2
    assert np.max(np.abs(psi - expect)) <= 1e-9


# -- inequality chain --------------------------------------------------------------------------

def test_delta_chain_conformal_case():
    # k = 0: the gap is exactly log(beta)
    chk = modulus_chain_check(0.0, 0.5, 1.0, 1e-4, 1.05)
    assert chk.residual == pytest.approx(math.log(1.05), abs=1e-12)


def test_delta_chain_upper_bounded_by_epsilon_term():
    for eps, beta in ((1e-3, 1.1), (1e-4, 1.01), (1e-5, 1.001)):
        chk = modulus_chain_check(1.0, 0.9, 2.0, eps, beta)
        assert chk.numeric <= chk.closed_form + 2.0 * beta ** 2 * eps


def test_delta_chain_joint_limit():
    gaps = [
        modulus_chain_check(1.0, 0.9, 2.0, eps, beta).residual
        for eps, beta in ((1e-3, 1.1), (1e-4, 1.01), (1e-5, 1.001))
    ]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] <= 1.1e-3


def test_delta_chain_beta_monotone_at_fixed_epsilon():
    gaps = [
        modulus_chain_check(1.0, 0.9, 2.0, 1e-5, beta).residual
        for beta in (1.1, 1.01, 1.001)
    ]
    assert gaps[0] > gaps[1] > gaps[2]


def test_delta_chain_epsilon_floor():
    # the gap sits below log(beta) by an O(eps^m) amount that shrinks with eps
    beta = 1.01
    floor = math.log(beta)
    deviations = [
        floor - modulus_chain_check(1.0, 0.9, 2.0, eps, beta).residual
        for eps in (1e-3, 1e-4, 1e-5)
    ]
    assert all(d >= 0.0 for d in deviations)
    assert deviations[0] > deviations[1] > deviations[2]


def test_delta_chain_consistent_with_radius_bound():
    k, a, m = 1.0, 0.9, 2.0
    chk = modulus_chain_check(k, a, m, 1e-5, 1.001)
    delta_star = math.exp(chk.closed_form) * 1e-5 / 4.0
    bound = koebe_lower_bound(1.0, DilatationSpec(k=k * a ** m, m=m))
    assert abs(delta_star - bound) <= 1e-14


def test_delta_chain_domain():
    with pytest.raises(DomainError):
        modulus_chain_check(1.0, 1.5, 2.0, 1e-4, 1.01)
    with pytest.raises(DomainError):
        modulus_chain_check(1.0, 0.9, 2.0, 1e-4, 0.9)
    with pytest.raises(DomainError):
        modulus_chain_check(1.0, 0.9, 2.0, 0.2, 1.01)
