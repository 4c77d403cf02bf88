"""Planar harmonic mappings f = h + conj(g) of the unit disk.

Provides the map data model (evaluation, analytic dilatation, Jacobian,
class-membership checks) and closed-form evaluators for the analytic Koebe
map K, the harmonic Koebe map, and its generalizations with dilatation z^m
for m = 2, 3, 4.

Closed forms use the principal branch of the complex arctangent. For both
arguments that occur here, (1+2z)/sqrt(3) and z, the principal branch cuts
(imaginary axis, |Im| >= 1) touch the closed image of the disk only at single
boundary points, so the evaluators are continuous on the open disk; tests
confirm this against the independent shear-series and ray-continuation
oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidSpec, NormalizationError, PoleError
from .reports import BoundReport
from .series import PowerSeries
from .threads import ordered_map

#: S_H^0 normalization tolerance at the origin
NORMALIZATION_TOL = 1e-12

#: series evaluation is meaningless too close to the circle of convergence
SERIES_EVAL_CAP = 1.0 - 1e-6

#: |z - 1| below this counts as the pole shared by all closed forms
POLE_TOL = 1e-12

#: residual tolerance for |w_f(z)| <= k |z|^m membership sweeps
CLASS_TOL = 1e-9

#: outer radius of the membership grid
CLASS_GRID_RADIUS = 0.999


@dataclass(frozen=True)
class DilatationSpec:
    """Parameters (k, m, alpha) of the dilatation bound k e^{i alpha} z^m.

    k is the amplitude in [0, 1], m >= 1 the vanishing order at the origin,
    alpha the phase, normalized to [0, 2*pi).
    """

    k: float
    m: float
    alpha: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.k <= 1.0) or not math.isfinite(self.k):
            raise InvalidSpec(f"amplitude k={self.k} outside [0, 1]")
        if not (self.m >= 1.0) or not math.isfinite(self.m):
            raise InvalidSpec(f"order m={self.m} must be >= 1")
        object.__setattr__(self, "alpha", float(self.alpha) % (2.0 * math.pi))

    @property
    def integral_order(self) -> int:
        """m as an int; raises InvalidSpec when m is not integral."""
        m = round(self.m)
        if abs(self.m - m) > 1e-12:
            raise InvalidSpec(f"series representation needs integer m, got {self.m}")
        return int(m)

    @property
    def amplitude(self) -> complex:
        return self.k * complex(math.cos(self.alpha), math.sin(self.alpha))


class HarmonicMap:
    """Pair (h, g) of truncated series representing f = h + conj(g)."""

    __slots__ = ("h", "g", "normalized", "_dh", "_dg")

    def __init__(self, h: PowerSeries, g: PowerSeries, normalized: bool = True):
        if normalized:
            if abs(h.coefficient(0)) > NORMALIZATION_TOL or abs(g.coefficient(0)) > NORMALIZATION_TOL:
                raise NormalizationError("h(0) and g(0) must vanish")
            if abs(h.coefficient(1) - 1.0) > NORMALIZATION_TOL:
                raise NormalizationError("h'(0) must equal 1")
            if abs(g.coefficient(1)) > NORMALIZATION_TOL:
                raise NormalizationError("g'(0) must vanish")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "normalized", bool(normalized))
        object.__setattr__(self, "_dh", h.derivative())
        object.__setattr__(self, "_dg", g.derivative())

    def __setattr__(self, name, value):  # instances are immutable
        raise AttributeError("HarmonicMap is immutable")

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if abs(z) > SERIES_EVAL_CAP:
            raise DomainError(f"|z|={abs(z):.8f} beyond series evaluation cap")
        return self.h(z) + self.g(z).conjugate()

    def eval_circle(self, r: float, n: int) -> np.ndarray:
        """f on the uniform angular grid of the circle |z| = r."""
        if not (0.0 < r <= SERIES_EVAL_CAP):
            raise DomainError(f"series circle radius {r} out of range")
        return self.h.eval_circle(r, n) + np.conj(self.g.eval_circle(r, n))

    def dilatation(self) -> PowerSeries:
        """Analytic dilatation g'/h' as a series of order N-1."""
        return self._dg.div(self._dh, order=max(self._dh.order, 0))

    def jacobian(self, z: complex) -> float:
        """|h'(z)|^2 - |g'(z)|^2 (positive iff sense-preserving at z)."""
        z = complex(z)
        if abs(z) > SERIES_EVAL_CAP:
            raise DomainError(f"|z|={abs(z):.8f} beyond series evaluation cap")
        return abs(self._dh(z)) ** 2 - abs(self._dg(z)) ** 2

    def jacobian_circle(self, r: float, n: int) -> np.ndarray:
        if not (0.0 <= r <= SERIES_EVAL_CAP):
            raise DomainError(f"series circle radius {r} out of range")
        dh = self._dh.eval_circle(r, n)
        dg = self._dg.eval_circle(r, n)
        return np.abs(dh) ** 2 - np.abs(dg) ** 2

    def __repr__(self) -> str:
        return (
            f"HarmonicMap(order={self.h.order}, normalized={self.normalized})"
        )


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

_SQRT3 = math.sqrt(3.0)


def _as_points(z) -> np.ndarray:
    pts = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(pts - 1.0) <= POLE_TOL):
        raise PoleError("all closed forms have a pole at z = 1")
    if np.any(np.abs(pts) > 1.0 + 1e-12):
        raise DomainError("closed forms are defined on the closed unit disk")
    return pts


def _koebe(z: np.ndarray) -> np.ndarray:
    return z / (1.0 - z) ** 2


def _kh1_parts(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = (1.0 - z) ** 3
    h = (z - z * z / 2.0 + z ** 3 / 6.0) / d
    g = (z * z / 2.0 + z ** 3 / 6.0) / d
    return h, g


def _kh2_parts(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = 3.0 * (z - 1.0) ** 3
    h = -1.0 / 3.0 - 1.0 / d
    g = -1.0 / 3.0 + (-1.0 + 3.0 * z - 3.0 * z * z) / d
    return h, g


def _kh3_parts(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = (z - 1.0) ** 3
    t = np.arctan((1.0 + 2.0 * z) / _SQRT3)
    a = -27.0 + 2.0 * math.pi / _SQRT3
    h = (a - 3.0 * (9.0 - 7.0 * z + 2.0 * z * z) / d - 4.0 * _SQRT3 * t) / 54.0
    g = (a - (27.0 - 75.0 * z + 60.0 * z * z) / d - 4.0 * _SQRT3 * t) / 54.0
    return h, g


def _kh4_parts(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = 12.0 * (z - 1.0) ** 3
    t = np.arctan(z) / 4.0
    h = -2.0 / 3.0 - (8.0 - 9.0 * z + 3.0 * z * z) / d - t
    g = -2.0 / 3.0 - (8.0 - 21.0 * z + 15.0 * z * z) / d - t
    return h, g


_PARTS = {
    "KH_1": _kh1_parts,
    "KH_2": _kh2_parts,
    "KH_3": _kh3_parts,
    "KH_4": _kh4_parts,
}


def closed_form_ids() -> tuple[str, ...]:
    """Identifiers accepted by eval_closed_form (and the JSON schema)."""
    return ("K",) + tuple(sorted(_PARTS))


def dilatation_order(name: str) -> int:
    """Vanishing order m of the dilatation z^m of the named map."""
    if name == "K":
        raise InvalidSpec("the analytic Koebe map has zero dilatation")
    return int(name.split("_")[1])


def eval_closed_form(name: str, z):
    """Evaluate a closed-form map at a point or array of points.

    Points may lie on the boundary circle except at the common pole z = 1;
    scalar input yields a complex scalar.
    """
    pts = _as_points(z)
    if name == "K":
        vals = _koebe(pts)
    else:
        try:
            parts = _PARTS[name]
        except KeyError:
            raise InvalidSpec(f"unknown closed form {name!r}; use one of {closed_form_ids()}")
        h, g = parts(pts)
        vals = h + np.conj(g)
    if np.isscalar(z) or np.ndim(z) == 0:
        return complex(vals)
    return vals


def closed_form_parts(name: str, z) -> tuple[np.ndarray, np.ndarray]:
    """Holomorphic and anti-holomorphic components (h, g) at the given points."""
    pts = _as_points(z)
    if name == "K":
        return _koebe(pts), np.zeros_like(pts)
    try:
        parts = _PARTS[name]
    except KeyError:
        raise InvalidSpec(f"unknown closed form {name!r}; use one of {closed_form_ids()}")
    return parts(pts)


def principal_arctan(w):
    """arctan via (1/2i) log((1+iw)/(1-iw)) with the principal logarithm.

    Reference implementation for branch checks; numpy's arctan agrees with it
    away from the cuts.
    """
    w = np.asarray(w, dtype=np.complex128)
    val = 0.5j * (np.log(1.0 - 1j * w) - np.log(1.0 + 1j * w))
    return val if val.ndim else complex(val)


def arctan_along_ray(w_end: complex, steps: int = 4096) -> complex:
    """Analytic continuation of arctan from 0 along t -> t*w_end.

    Integrates d/dt arctan(t w) = w / (1 + (t w)^2) with Simpson weights;
    independent of any branch choice, hence an oracle for cut detection.
    """
    if steps % 2:
        steps += 1
    t = np.linspace(0.0, 1.0, steps + 1)
    w = complex(w_end)
    integrand = w / (1.0 + (t * w) ** 2)
    weights = np.ones(steps + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return complex(np.sum(weights * integrand) * (1.0 / steps) / 3.0)


# ---------------------------------------------------------------------------
# class membership
# ---------------------------------------------------------------------------

def _membership_radii(n_radial: int) -> np.ndarray:
    # Chebyshev-Lobatto nodes on [0, 1], zero dropped, scaled to (0, 0.999]
    j = np.arange(n_radial)
    nodes = 0.5 * (1.0 + np.cos(np.pi * j / n_radial))
    return CLASS_GRID_RADIUS * nodes


def check_class(
    fmap: HarmonicMap,
    spec: DilatationSpec,
    n_radial: int = 64,
    n_angular: int = 256,
) -> BoundReport:
    """Sweep |w_f(z)| - k |z|^m over a polar grid; pass iff max <= 1e-9.

    The report's witness is the grid point where the residual peaks. Radial
    lines may be evaluated by worker threads; the maximum is reduced in fixed
    radial order, so results do not depend on the thread count.
    """
    if n_radial < 1 or n_angular < 1:
        raise DomainError("grid sizes must be positive")
    # The quotient series is truncation-clean (dropped orders of g' cannot
    # enter coefficients below the cutoff). Its noise floor is the float64
    # rounding of the stored coefficients, about eps * max|h'_n| per
    # coefficient, so the 1e-9 pass tolerance is meaningful for maps
    # constructed at orders up to a few dozen; beyond that the check is
    # still sound but can fail-by-noise for maps that are in the class.
    w = fmap.dilatation()
    radii = _membership_radii(n_radial)
    thetas = 2.0 * np.pi * np.arange(n_angular) / n_angular

    def line_max(r: float) -> tuple[float, int]:
        residual = np.abs(w.eval_circle(r, n_angular)) - spec.k * r ** spec.m
        j = int(np.argmax(residual))
        return float(residual[j]), j

    results = ordered_map(line_max, [float(r) for r in radii])
    best = -math.inf
    witness = 0j
    for r, (value, j) in zip(radii, results):
        if value > best:
            best = value
            witness = r * complex(math.cos(thetas[j]), math.sin(thetas[j]))
    return BoundReport(
        name="class-membership",
        inputs={
            "k": spec.k,
            "m": spec.m,
            "alpha": spec.alpha,
            "n_radial": n_radial,
            "n_angular": n_angular,
        },
        value=CLASS_TOL,
        measured=best,
        passed=bool(best <= CLASS_TOL),
        witness=witness,
    )
