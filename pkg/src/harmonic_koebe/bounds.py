"""Closed-form bounds for normalized univalent harmonic maps.

Pure formula layer: modulus growth and covered-disk radii under the
dilatation bound |w_f| <= k|z|^m, constants R_q and d_q for maps whose
anti-holomorphic part vanishes to order q, the resulting coefficient
estimates, and the sharp area lower bound. All functions are stateless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidSpec
from .harmonic import DilatationSpec, eval_closed_form

_HEINZ = 3.0 * math.sqrt(3.0) / (2.0 * math.pi)


@dataclass(frozen=True)
class ClassIndex:
    """Indices (p, q) of the first nonzero coefficients a_p and b_q."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise InvalidSpec("both indices must be at least 2")


def koebe_lower_bound(r: float, spec: DilatationSpec) -> float:
    """Guaranteed modulus |f(z)| >= r / (4 (1 + k r^m)^{2/m}) at |z| = r.

    r = 1 is allowed as the limiting value (the covered-disk radius).
    """
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"radius {r} outside [0, 1]")
    return r / (4.0 * (1.0 + spec.k * r ** spec.m) ** (2.0 / spec.m))


def koebe_radius_lower(spec: DilatationSpec) -> float:
    """Radius of the disk around 0 covered by every map of class (k, m)."""
    return 1.0 / (4.0 * (1.0 + spec.k) ** (2.0 / spec.m))


def one_sixth_predicate(spec: DilatationSpec) -> tuple[bool, bool]:
    """(stated, exact) conditions for the covered radius to reach 1/6.

    `stated` is the headline hypothesis "k <= 1/2 or m >= 4"; `exact` is the
    condition (1+k)^{2/m} <= 3/2 actually equivalent to
    koebe_radius_lower >= 1/6. They disagree, e.g. at (k, m) = (1/2, 1).
    """
    stated = spec.k <= 0.5 or spec.m >= 4.0
    exact = (1.0 + spec.k) ** (2.0 / spec.m) <= 1.5
    return stated, exact


def class_constants(idx: ClassIndex) -> tuple[float, float]:
    """(R_q, d_q) with R_q = 2^(-2q/(q-1)) and d_q = 2 pi / (3 sqrt(3) R_q)."""
    r_q = 2.0 ** (-2.0 * idx.q / (idx.q - 1.0))
    d_q = 2.0 * math.pi / (3.0 * math.sqrt(3.0) * r_q)
    return r_q, d_q


def coefficient_bound(idx: ClassIndex) -> float:
    """Upper bound for |a_p| in terms of (R_q, d_q).

    General form d_q^{p-1} (d_q R_q / p + p); for p = 2 the bound improves to
    d_q (d_q R_q / 2 + 2) - 2 and the smaller of the two is returned.
    """
    r_q, d_q = class_constants(idx)
    general = d_q ** (idx.p - 1) * (d_q * r_q / idx.p + idx.p)
    if idx.p == 2:
        improved = d_q * (d_q * r_q / 2.0 + 2.0) - 2.0
        return min(general, improved)
    return general


def heinz_lower(r: float) -> float:
    """Lower bound 3 sqrt(3) R / (2 pi) for the first coefficient of a
    harmonic self-map of the disk scaled to cover radius R; equals 1/d_q at
    R = R_q."""
    if r <= 0.0:
        raise DomainError("radius must be positive")
    return _HEINZ * r


def area_lower_bound(spec: DilatationSpec) -> float:
    """Sharp image-area bound pi (1 - k^2 / (m+1)); m must be a positive integer."""
    m = spec.integral_order
    return math.pi * (1.0 - spec.k * spec.k / (m + 1.0))


def kh3_radius_interval() -> tuple[float, float]:
    """Two-sided bracket for the covered radius of the class (k=1, m=3).

    Lower end is the guaranteed radius 1/(4 * 2^(2/3)); upper end is the
    modulus of the m=3 harmonic Koebe map at z = -1.
    """
    lower = koebe_radius_lower(DilatationSpec(k=1.0, m=3.0))
    upper = abs(eval_closed_form("KH_3", -1.0))
    return lower, upper
