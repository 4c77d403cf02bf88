"""Shearing construction of harmonic maps.

Given a normalized conformal series phi (with phi(0) = 0, phi'(0) = 1) and a
prescribed analytic dilatation w (|w(0)| < 1), builds the harmonic map whose
parts solve

    h' = phi' / (1 - w),      g' = w * phi' / (1 - w),

integrated with h(0) = g(0) = 0. By construction h - g = phi to the requested
order and the dilatation of the result is w.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByNonUnit, NormalizationError
from .harmonic import NORMALIZATION_TOL, DilatationSpec, HarmonicMap
from .series import ZERO_TOL, PowerSeries

DEFAULT_SHEAR_ORDER = 128


def koebe_series(order: int) -> PowerSeries:
    """Maclaurin series of z/(1-z)^2: coefficients c_n = n."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return PowerSeries(np.arange(order + 1, dtype=np.complex128))


def monomial_dilatation(spec: DilatationSpec, order: int) -> PowerSeries:
    """Series of k e^{i alpha} z^m; requires integer m and order >= m."""
    m = spec.integral_order
    if order < m:
        raise ValueError(f"order {order} too small for z^{m}")
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[m] = spec.amplitude
    return PowerSeries(coeffs)


def shear(phi: PowerSeries, w: PowerSeries, order: int = DEFAULT_SHEAR_ORDER) -> HarmonicMap:
    """Harmonic map with h - g = phi and dilatation w, truncated to `order`.

    The output is S_H^0-normalized exactly when w(0) = 0; otherwise the map
    is returned with its normalized flag cleared.
    """
    if abs(phi.coefficient(0)) > NORMALIZATION_TOL:
        raise NormalizationError("phi(0) must vanish")
    if abs(phi.coefficient(1) - 1.0) > NORMALIZATION_TOL:
        raise NormalizationError("phi'(0) must equal 1")
    w0 = w.coefficient(0)
    if abs(1.0 - w0) <= ZERO_TOL:
        raise DivisionByNonUnit("1 - w(0) is numerically zero")
    if abs(w0) >= 1.0:
        raise DivisionByNonUnit(f"|w(0)| = {abs(w0):.4f} must be below 1")

    # divide at order-1 so the antiderivatives carry every requested term
    dphi = phi.derivative()
    denom = (-w) + PowerSeries([1.0])
    dh = dphi.div(denom, order=max(order - 1, 0))
    dg = w.mul(dh, order=max(order - 1, 0))
    h = dh.antiderivative().truncated(order)
    g = dg.antiderivative().truncated(order)
    return HarmonicMap(h, g, normalized=abs(w0) <= NORMALIZATION_TOL)


def shear_koebe(spec: DilatationSpec, order: int = DEFAULT_SHEAR_ORDER) -> HarmonicMap:
    """Shear of the Koebe series with dilatation k e^{i alpha} z^m."""
    return shear(koebe_series(order), monomial_dilatation(spec, spec.integral_order), order)
