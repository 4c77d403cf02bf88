"""Empirical covered-radius estimation from boundary minima.

Samples |f| on circles r -> 1^-, refines the angular minimum by golden
section, and Richardson-extrapolates the rung minima in (1 - r) to the
boundary limit.

A truncated Maclaurin series cannot be trusted arbitrarily close to its
circle of convergence: the rung ladder therefore keeps only radii where an
estimated truncation tail (fitted from the map's own trailing coefficients)
stays below `RUNG_TAIL_TOL`, and falls back to shallower radii when too few
requested rungs survive. Excluded rungs would otherwise report spurious
minima of the truncation noise rather than of the map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DomainError
from .harmonic import SERIES_EVAL_CAP, HarmonicMap, closed_form_ids, eval_closed_form
from .series import PowerSeries

#: estimated truncation tail above this disqualifies a ladder rung
RUNG_TAIL_TOL = 1e-6

#: golden-section bracket width target (radians)
REFINE_WIDTH = 1e-10

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

MapLike = Union[HarmonicMap, str]


@dataclass(frozen=True)
class BoundaryProfile:
    """Samples of f on the circle |z| = r at angles `thetas`."""

    r: float
    thetas: np.ndarray
    values: np.ndarray
    moduli: np.ndarray
    evaluator: Callable[[float], complex]
    full_circle: bool

    def __len__(self) -> int:
        return self.thetas.size


@dataclass(frozen=True)
class RadiusEstimate:
    """Boundary-minimum estimate with its radial ladder.

    `value` is the minimum modulus on the deepest trusted rung,
    `argmin_theta` its angle, `r_ladder` all (r, min) pairs used, and
    `extrapolated` the Richardson limit of the rung minima at r = 1.
    """

    value: float
    argmin_theta: float
    r_ladder: list[tuple[float, float]]
    extrapolated: float

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "argmin_theta": self.argmin_theta,
            "r_ladder": [[r, m] for r, m in self.r_ladder],
            "extrapolated": self.extrapolated,
        }


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

def _scaled_coeffs(ps: PowerSeries, r: float) -> np.ndarray:
    """Coefficients c_n r^n with the negligible trailing block trimmed."""
    scaled = ps.coeffs * (r ** np.arange(ps.coeffs.size))
    mags = np.abs(scaled)
    peak = float(mags.max()) if mags.size else 0.0
    if peak == 0.0:
        return scaled[:1]
    keep = np.nonzero(mags > peak * 1e-22)[0]
    return scaled[: int(keep[-1]) + 1]


# three-way split of 2 pi: A has 30 significant bits, k*A and k*B are exact
# for the index ranges used here, C carries the tail beyond float64
_PI2_HI = 6.283185307179586
_PI2_A = math.ldexp(round(math.ldexp(_PI2_HI, 27)), -27)
_PI2_B = _PI2_HI - _PI2_A
_PI2_C = 2.4492935982947064e-16
_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitter


def _unit_phases(theta: float, count: int) -> np.ndarray:
    """e^{i n theta} for n = 0..count-1 with phases reduced mod 2 pi.

    Naive n * theta loses ~ulp(n * theta) of phase, which for high orders
    dwarfs everything else when the series is summed near the unit circle;
    a double-double product plus split-constant reduction keeps every phase
    accurate to a few ulp.
    """
    n = np.arange(count, dtype=np.float64)
    c = _SPLIT * theta
    t_hi = c - (c - theta)
    t_lo = theta - t_hi
    x = n * theta
    err = (n * t_hi - x) + n * t_lo  # exact residual of the product
    k = np.round(x * (1.0 / _PI2_HI))
    phase = ((x - k * _PI2_A) - k * _PI2_B) + (err - k * _PI2_C)
    return np.exp(1j * phase)


def _series_evaluator(fmap: HarmonicMap, r: float) -> Callable[[float], complex]:
    hc = _scaled_coeffs(fmap.h, r)
    gc = _scaled_coeffs(fmap.g, r)
    count = max(hc.size, gc.size)

    def at(theta: float) -> complex:
        e = _unit_phases(theta, count)
        # pairwise np.sum keeps cancellation error near the sqrt(N) floor,
        # well below sequential BLAS accumulation on this ill-conditioned data
        return complex(np.sum(hc * e[: hc.size]) + np.conj(np.sum(gc * e[: gc.size])))

    return at


def boundary_profile(fmap: MapLike, r: float, n: int) -> BoundaryProfile:
    """Sample f(r e^{i theta_j}) at theta_j = 2 pi j / n.

    Accepts a HarmonicMap (0 < r <= series cap) or a closed-form identifier
    (0 < r <= 1). At r = 1 the sample at theta = 0 (the common pole) is
    dropped.
    """
    if n < 16:
        raise DomainError("need at least 16 angular samples")
    thetas = 2.0 * np.pi * np.arange(n) / n
    if isinstance(fmap, HarmonicMap):
        if not (0.0 < r <= SERIES_EVAL_CAP):
            raise DomainError(f"series profile radius {r} outside (0, {SERIES_EVAL_CAP}]")
        values = fmap.eval_circle(r, n)
        evaluator = _series_evaluator(fmap, r)
        full = True
    else:
        if fmap not in closed_form_ids():
            raise DomainError(f"unknown closed form {fmap!r}")
        if not (0.0 < r <= 1.0):
            raise DomainError(f"closed-form profile radius {r} outside (0, 1]")
        full = r < 1.0
        if not full:
            thetas = thetas[1:]
        z = r * np.exp(1j * thetas)
        values = eval_closed_form(fmap, z)
        name = fmap

        def evaluator(theta: float, _r=r, _name=name) -> complex:
            return eval_closed_form(_name, _r * complex(math.cos(theta), math.sin(theta)))

    return BoundaryProfile(
        r=float(r),
        thetas=thetas,
        values=values,
        moduli=np.abs(values),
        evaluator=evaluator,
        full_circle=full,
    )


# ---------------------------------------------------------------------------
# minima
# ---------------------------------------------------------------------------

def _golden_min(f: Callable[[float], float], a: float, b: float, width: float) -> tuple[float, float]:
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > width:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def min_modulus(profile: BoundaryProfile, refine: bool = True) -> tuple[float, float]:
    """(theta, value) of the minimum of theta -> |f(r e^{i theta})|.

    Coarse pass over the profile samples (ties to the smallest theta,
    non-finite samples ignored), then optional golden-section refinement in
    the bracketing interval down to width 1e-10. The refined value never
    exceeds the coarse one.
    """
    if len(profile) == 0:
        raise DomainError("empty profile")
    moduli = np.where(np.isfinite(profile.moduli), profile.moduli, np.inf)
    i = int(np.argmin(moduli))
    theta0 = float(profile.thetas[i])
    best_val = float(moduli[i])
    if not refine or not math.isfinite(best_val):
        return theta0, best_val

    spacing = 2.0 * np.pi / len(profile) if profile.full_circle else float(
        profile.thetas[1] - profile.thetas[0]
    )
    lo = theta0 - spacing
    hi = theta0 + spacing
    if not profile.full_circle:
        # the excluded pole sits at theta = 0; never bracket across it
        lo = max(lo, float(profile.thetas[0]))
        hi = min(hi, float(profile.thetas[-1]))

    def fval(theta: float) -> float:
        v = abs(profile.evaluator(theta))
        return v if math.isfinite(v) else math.inf

    theta_ref, val_ref = _golden_min(fval, lo, hi, REFINE_WIDTH)
    if val_ref < best_val:
        return theta_ref % (2.0 * np.pi), val_ref
    return theta0, best_val


# ---------------------------------------------------------------------------
# truncation-tail estimate
# ---------------------------------------------------------------------------

def _growth_fit(ps: PowerSeries) -> tuple[float, float] | None:
    """Fit |c_n| ~ C n^p on the trailing quarter of the coefficients.

    Returns None when there is no evidence of a continuing tail: a zero or
    nearly-zero trailing block, or fewer than four nonzero trailing
    coefficients to extrapolate from. Such series (identity, the sharp
    area-extremal maps, any low-degree hand-built polynomial) are taken at
    face value as exact maps.
    """
    mags = np.abs(ps.coeffs)
    n_total = mags.size
    if n_total < 4 or mags.max() == 0.0:
        return None
    start = max(1, (3 * n_total) // 4)
    window = mags[start:]
    if window.max() <= 1e-13 * mags.max():
        return None  # trailing block is zero: series is the whole map
    idx = np.nonzero(window > 0)[0] + start
    if idx.size < 4:
        return None  # too few points to extrapolate a tail from
    if idx.size > 256:
        sel = np.unique(np.linspace(0, idx.size - 1, 256).astype(int))
        idx = idx[sel]
    ln_n = np.log(idx.astype(float))
    ln_c = np.log(mags[idx])
    p = float(np.polyfit(ln_n, ln_c, 1)[0])
    p = min(max(p, 0.0), 10.0)
    c = float(np.max(mags[idx] / idx.astype(float) ** p)) * 1.5
    return c, p


def _tail_estimate(fit: tuple[float, float] | None, order: int, r: float) -> float:
    """Estimated worst-direction tail sum_{n > order} C n^p r^n."""
    if fit is None or r <= 0.0:
        return 0.0
    c, p = fit
    if r >= 1.0:
        return math.inf
    total = 0.0
    n0 = order + 1
    chunk = 4096
    log_r = math.log(r)
    for _ in range(512):
        n = np.arange(n0, n0 + chunk, dtype=float)
        part = float(np.sum(np.exp(p * np.log(n) + n * log_r)))
        total += part
        n0 += chunk
        if part < 1e-6 * max(total, 1e-300) or part == 0.0:
            break
    return c * total


def series_tail_estimate(fmap: HarmonicMap, r: float) -> float:
    """Estimated truncation error of evaluating the map's series at |z| = r."""
    return _tail_estimate(_growth_fit(fmap.h), fmap.h.order, r) + _tail_estimate(
        _growth_fit(fmap.g), fmap.g.order, r
    )


# ---------------------------------------------------------------------------
# ladder estimate
# ---------------------------------------------------------------------------

def koebe_radius_estimate(
    fmap: HarmonicMap,
    j_min: int = 4,
    j_max: int = 12,
    n: int = 1024,
    refine: bool = True,
    rung_tol: float = RUNG_TAIL_TOL,
) -> RadiusEstimate:
    """Ladder of boundary minima at radii r_j = 1 - 2^-j, extrapolated to 1.

    Rungs whose estimated truncation tail exceeds `rung_tol` are dropped;
    if fewer than three requested rungs survive, the ladder extends to
    shallower radii (j < j_min) so an extrapolation is still possible. The
    rungs actually used are reported in `r_ladder`.
    """
    if not (4 <= j_min < j_max <= 16):
        raise DomainError("need 4 <= j_min < j_max <= 16")
    fits = (_growth_fit(fmap.h), _growth_fit(fmap.g))

    def tail(r: float) -> float:
        return _tail_estimate(fits[0], fmap.h.order, r) + _tail_estimate(
            fits[1], fmap.g.order, r
        )

    rungs: list[int] = []
    for j in range(j_min, j_max + 1):
        if tail(1.0 - 2.0 ** (-j)) > rung_tol:
            break  # tails only grow with r
        rungs.append(j)
    j = j_min - 1
    while len(rungs) < 3 and j >= 1:
        if tail(1.0 - 2.0 ** (-j)) <= rung_tol:
            rungs.insert(0, j)
        j -= 1
    if not rungs:
        raise DomainError(
            "series order too low for any trusted ladder rung; rebuild the map at higher order"
        )
    rungs.sort()

    ladder: list[tuple[float, float]] = []
    argmin_theta = 0.0
    for j in rungs:
        r = 1.0 - 2.0 ** (-j)
        theta, val = min_modulus(boundary_profile(fmap, r, n), refine)
        ladder.append((r, val))
        argmin_theta = theta

    value = ladder[-1][1]
    return RadiusEstimate(value, argmin_theta, ladder, _extrapolate(ladder))


def _extrapolate(ladder: list[tuple[float, float]]) -> float:
    """Limit of the rung minima at r = 1 from the trailing rungs.

    The minima of the sheared-Koebe family approach their boundary value
    like a (1-r)^p with non-integer p, so with three consistent rungs the
    decay power is fitted and eliminated; otherwise (noise-limited or short
    ladders) a plain linear two-point Richardson step is used.
    """
    if len(ladder) == 1:
        return ladder[0][1]
    (r2, m2), (r1, m1) = ladder[-2], ladder[-1]
    e2, e1 = 1.0 - r2, 1.0 - r1
    linear = (m1 * e2 - m2 * e1) / (e2 - e1)
    if len(ladder) < 3:
        return linear
    m3 = ladder[-3][1]
    d_prev = m2 - m3
    d_last = m1 - m2
    if d_last == 0.0:
        return m1
    ratio = d_prev / d_last
    if ratio <= 1.0:  # not contracting: increments are noise-dominated
        return linear
    return m1 + d_last / (ratio - 1.0)


def closed_form_radius_estimate(name: str, n: int = 1024, refine: bool = True) -> RadiusEstimate:
    """Boundary minimum of a closed form, evaluated directly at r = 1."""
    theta, val = min_modulus(boundary_profile(name, 1.0, n), refine)
    return RadiusEstimate(val, theta, [(1.0, val)], val)
