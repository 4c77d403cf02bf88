"""Image area of a harmonic map, two independent ways.

`area_series` sums the polar-coordinate identity
pi * sum n (|a_n|^2 - |b_n|^2) r^{2n}; `area_quadrature` integrates the
Jacobian over the subdisk with Gauss-Legendre (radial) x trapezoid
(angular) quadrature. For truncated maps both compute the same polynomial
area, which is what the cross-method tests pin down.

Maps of Koebe type have images of infinite area; the series sum then grows
without bound and a DivergenceError is raised once the running partial sum
passes AREA_DIVERGENCE_LIMIT.
"""

from __future__ import annotations

import numpy as np

from .errors import DivergenceError, DomainError
from .harmonic import DilatationSpec, HarmonicMap
from .series import PowerSeries

#: partial sums beyond this declare the image area infinite
AREA_DIVERGENCE_LIMIT = 1e6


def area_series(fmap: HarmonicMap, r: float) -> float:
    """Area of f({|z| < r}) from the coefficient identity.

    Raises DivergenceError when the running partial sum exceeds the
    divergence sentinel (infinite-area maps at r close to 1).
    """
    if not (0.0 < r <= 1.0):
        raise DomainError(f"radius {r} outside (0, 1]")
    order = max(fmap.h.order, fmap.g.order)
    a = fmap.h.padded(order)
    b = fmap.g.padded(order)
    n = np.arange(1, order + 1, dtype=float)
    terms = n * (np.abs(a[1:]) ** 2 - np.abs(b[1:]) ** 2)
    if r < 1.0:
        terms = terms * r ** (2.0 * n)
    partial = np.pi * np.cumsum(terms)
    worst = float(np.max(partial)) if partial.size else 0.0
    if worst > AREA_DIVERGENCE_LIMIT:
        raise DivergenceError(
            f"area partial sums exceed {AREA_DIVERGENCE_LIMIT:g}; image area diverges",
            partial_sum=worst,
        )
    return float(partial[-1]) if partial.size else 0.0


def area_quadrature(fmap: HarmonicMap, r: float, n_rad: int = 64, n_ang: int = 256) -> float:
    """Area of f({|z| < r}) by integrating the Jacobian in polar coordinates."""
    if not (0.0 < r < 1.0):
        raise DomainError(f"quadrature radius {r} outside (0, 1)")
    if n_rad < 1 or n_ang < 4:
        raise DomainError("quadrature sizes too small")
    nodes, weights = np.polynomial.legendre.leggauss(n_rad)
    rho = 0.5 * r * (nodes + 1.0)
    w = 0.5 * r * weights
    total = 0.0
    for rho_i, w_i in zip(rho, w):
        ring_mean = float(np.mean(fmap.jacobian_circle(float(rho_i), n_ang)))
        total += w_i * rho_i * 2.0 * np.pi * ring_mean
    return total


def extremal_map(spec: DilatationSpec) -> HarmonicMap:
    """The sharp minimizer z + (k e^{i alpha}/(m+1)) conj(z)^{m+1} of the area bound."""
    m = spec.integral_order
    h = np.zeros(m + 2, dtype=np.complex128)
    h[1] = 1.0
    g = np.zeros(m + 2, dtype=np.complex128)
    g[m + 1] = spec.amplitude / (m + 1)
    return HarmonicMap(PowerSeries(h), PowerSeries(g))
