import math

import numpy as np
import pytest

from harmonic_koebe import (
    DilatationSpec,
    DomainError,
    HarmonicMap,
    InvalidSpec,
    NormalizationError,
    PoleError,
    PowerSeries,
    check_class,
    closed_form_ids,
    closed_form_parts,
    eval_closed_form,
)
from harmonic_koebe.harmonic import arctan_along_ray, principal_arctan

from conftest import agreement_grid, build_koebe_shear


# -- data model ----------------------------------------------------------------

def test_normalization_enforced():
    with pytest.raises(NormalizationError):
        HarmonicMap(PowerSeries([0.1, 1.0]), PowerSeries([0.0]))
    with pytest.raises(NormalizationError):
        HarmonicMap(PowerSeries([0.0, 2.0]), PowerSeries([0.0]))
    with pytest.raises(NormalizationError):
        HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.0, 0.5]))
    # non-normalized maps are allowed when flagged
    m = HarmonicMap(PowerSeries([0.0, 2.0]), PowerSeries([0.0]), normalized=False)
    assert not m.normalized


def test_dilatation_spec_validation():
    with pytest.raises(InvalidSpec):
        DilatationSpec(k=1.5, m=1.0)
    with pytest.raises(InvalidSpec):
        DilatationSpec(k=0.5, m=0.5)
    spec = DilatationSpec(k=0.5, m=2.0, alpha=7.0)
    assert 0.0 <= spec.alpha < 2.0 * math.pi
    with pytest.raises(InvalidSpec):
        DilatationSpec(k=1.0, m=1.5).integral_order


# -- evaluation ----------------------------------------------------------------

def test_eval_identity(identity_map):
    z = 0.3 + 0.4j
    assert identity_map(z) == z


def test_eval_conjugate_part():
    m = HarmonicMap(PowerSeries([0, 1]), PowerSeries([0, 0, 0.5]))
    assert abs(m(0.5) - (0.5 + 0.125)) <= 1e-15


def test_eval_cap():
    m = HarmonicMap(PowerSeries([0, 1]), PowerSeries([0]))
    with pytest.raises(DomainError):
        m(1.0)
    with pytest.raises(DomainError):
        m(0.9999999)


def test_series_matches_closed_form_deep_in_disk():
    # at r = 0.99 the Maclaurin tail only drops below 1e-6 around order 4096
    fmap = build_koebe_shear(1.0, 1, 4096)
    got = fmap(-0.99)
    expect = eval_closed_form("KH_1", -0.99)
    assert abs(got - expect) <= 1e-6


# -- closed forms ------------------------------------------------------------------

def test_closed_form_ids():
    assert closed_form_ids() == ("K", "KH_1", "KH_2", "KH_3", "KH_4")


@pytest.mark.parametrize(
    "name,expected,tol",
    [
        ("KH_2", -1.0 / 3.0, 1e-12),
        ("KH_3", -0.231289, 5e-7),
        ("KH_4", -0.273968, 5e-7),
        ("KH_1", -1.0 / 6.0, 1e-12),
    ],
)
def test_closed_form_values_at_minus_one(name, expected, tol):
    assert abs(eval_closed_form(name, -1.0) - expected) <= tol


def test_koebe_closed_form():
    assert abs(eval_closed_form("K", 0.5) - 2.0) <= 1e-15


def test_pole_and_domain_guards():
    with pytest.raises(PoleError):
        eval_closed_form("KH_2", 1.0)
    with pytest.raises(DomainError):
        eval_closed_form("KH_2", 1.5)
    with pytest.raises(InvalidSpec):
        eval_closed_form("KH_9", 0.0)
    # boundary points away from the pole are fine
    val = eval_closed_form("KH_3", np.exp(1j * 2.0))
    assert np.isfinite(val)


def test_closed_form_parts_normalization():
    for name in closed_form_ids():
        h, g = closed_form_parts(name, 0.0)
        assert abs(h) <= 1e-14 and abs(g) <= 1e-14


def test_parts_difference_is_koebe():
    # h - g recovers the conformal part z/(1-z)^2 for every shear of it
    pts = agreement_grid(5, 7, 0.7)
    k = eval_closed_form("K", pts)
    for name in ("KH_1", "KH_2", "KH_3", "KH_4"):
        h, g = closed_form_parts(name, pts)
        assert np.max(np.abs(h - g - k)) <= 1e-10


# -- arctangent branch -----------------------------------------------------------

def test_principal_arctan_agrees_with_numpy():
    pts = agreement_grid(6, 8, 0.95)
    for w in ((1.0 + 2.0 * pts) / math.sqrt(3.0), pts):
        assert np.max(np.abs(np.arctan(w) - principal_arctan(w))) <= 1e-12


def test_arctan_ray_continuation_sees_no_cut():
    # the principal branch must agree with branch-free continuation from 0
    for z in (0.8, -0.8, 0.6 + 0.5j, -0.3 - 0.75j, 0.79j):
        for w in ((1.0 + 2.0 * z) / math.sqrt(3.0), z):
            cont = arctan_along_ray(w)
            assert abs(complex(np.arctan(w)) - cont) <= 1e-9


# -- dilatation and Jacobian ------------------------------------------------------

def test_dilatation_identity(identity_map):
    assert np.max(np.abs(identity_map.dilatation().coeffs)) == 0.0


def test_dilatation_of_shear_is_prescribed(kh_map_n128):
    # tight tolerance at an order where coefficient rounding stays below it
    w32 = build_koebe_shear(1.0, 1, 32).dilatation()
    c = w32.coeffs.copy()
    c[1] -= 1.0
    assert np.max(np.abs(c[:30])) <= 1e-10
    # at order 128 the stored-coefficient rounding raises the noise floor
    w = kh_map_n128.dilatation()
    c = w.coeffs.copy()
    c[1] -= 1.0
    assert np.max(np.abs(c[:126])) <= 1e-7


def test_dilatation_of_polynomial_map():
    k, m = 0.7, 3
    g = np.zeros(m + 2, dtype=complex)
    g[m + 1] = k / (m + 1)
    fmap = HarmonicMap(PowerSeries([0, 1, 0, 0, 0]), PowerSeries(g))
    w = fmap.dilatation()
    expect = np.zeros(w.coeffs.size, dtype=complex)
    expect[m] = k
    assert np.allclose(w.coeffs, expect, atol=1e-15)


def test_jacobian_identity(identity_map):
    assert identity_map.jacobian(0.3 + 0.1j) == pytest.approx(1.0)


def test_jacobian_extremal_map():
    m = HarmonicMap(PowerSeries([0, 1, 0]), PowerSeries([0, 0, 0.5]))
    for r in (0.2, 0.5, 0.9):
        z = r * np.exp(0.7j)
        assert m.jacobian(z) == pytest.approx(1.0 - r * r, abs=1e-14)


def test_jacobian_at_origin(kh_map_n128):
    assert kh_map_n128.jacobian(0.0) == pytest.approx(1.0)


def test_jacobian_domain_guard(identity_map):
    with pytest.raises(DomainError):
        identity_map.jacobian(1.0)


def test_sense_preservation_on_corpus():
    # J > 0 out to |z| = 0.99 needs enough series tail to be trusted there
    for m in (1, 2, 3, 4):
        fmap = build_koebe_shear(1.0, m, 4096)
        for r in (0.5, 0.9, 0.99):
            assert np.min(fmap.jacobian_circle(r, 64)) > 0.0


# -- class membership --------------------------------------------------------------

def test_check_class_shear_passes():
    fmap = build_koebe_shear(1.0, 3, 48)
    report = check_class(fmap, DilatationSpec(k=1.0, m=3.0))
    assert report.passed
    assert report.measured <= 1e-9


def test_check_class_identity_any_spec(identity_map):
    report = check_class(identity_map, DilatationSpec(k=0.3, m=2.0))
    assert report.passed


def test_check_class_detects_violation():
    fmap = build_koebe_shear(1.0, 1, 48)
    report = check_class(fmap, DilatationSpec(k=1.0, m=2.0))
    assert not report.passed
    # |z| beats |z|^2 most strongly at |z| = 1/2
    assert abs(abs(report.witness) - 0.5) <= 0.05
    assert report.measured == pytest.approx(0.25, abs=0.01)


def test_schwarz_growth_on_corpus():
    cases = [(1.0, m, 48) for m in (1, 2, 3, 4)]
    cases += [(k, m, 64) for k in (0.25, 0.5) for m in (1, 2, 3, 4)]
    for k, m, order in cases:
        fmap = build_koebe_shear(k, m, order)
        report = check_class(fmap, DilatationSpec(k=k, m=float(m)))
        assert report.passed, (k, m, report.measured)


def test_check_class_report_roundtrip():
    fmap = build_koebe_shear(0.5, 2, 64)
    report = check_class(fmap, DilatationSpec(k=0.5, m=2.0))
    data = report.to_dict()
    assert data["name"] == "class-membership"
    assert data["pass"] is True
    assert len(data["witness"]) == 2


def test_check_class_thread_count_does_not_change_result(monkeypatch):
    fmap = build_koebe_shear(0.5, 2, 64)
    spec = DilatationSpec(k=0.5, m=2.0)
    monkeypatch.delenv("HARMONIC_KOEBE_THREADS", raising=False)
    serial = check_class(fmap, spec)
    monkeypatch.setenv("HARMONIC_KOEBE_THREADS", "4")
    threaded = check_class(fmap, spec)
    assert serial.measured == threaded.measured
    assert serial.witness == threaded.witness


def test_worker_count_parsing(monkeypatch):
    from harmonic_koebe.threads import worker_count

    monkeypatch.delenv("HARMONIC_KOEBE_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("HARMONIC_KOEBE_THREADS", "8")
    assert worker_count() == 8
    monkeypatch.setenv("HARMONIC_KOEBE_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("HARMONIC_KOEBE_THREADS", "junk")
    assert worker_count() == 1
