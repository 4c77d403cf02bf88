"""Conformal-modulus identities behind the covered-radius bound.

Checks the quantitative pieces of the modulus-comparison argument: the
annulus modulus, the radial integral with its logarithmic antiderivative,
the slit-domain modulus asymptotic, the slit mapping property of 4*delta*K,
and the final inequality chain whose limit produces the covered radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .reports import BoundReport

#: absolute tolerance of the adaptive Simpson quadrature
SIMPSON_TOL = 1e-10

#: maximum bisection depth of the adaptive Simpson quadrature
SIMPSON_MAX_DEPTH = 40


@dataclass(frozen=True)
class ModulusCheck:
    """Closed-form value vs. independent numeric value of the same quantity."""

    params: dict
    closed_form: float
    numeric: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "closed_form": self.closed_form,
            "numeric": self.numeric,
            "residual": self.residual,
        }


def annulus_modulus(a: float, b: float) -> float:
    """Modulus log(b/a) / (2 pi) of the annulus a < |z| < b."""
    if not (0.0 < a < b):
        raise DomainError(f"need 0 < a < b, got a={a}, b={b}")
    return math.log(b / a) / (2.0 * math.pi)


def _adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                      tol: float = SIMPSON_TOL, max_depth: int = SIMPSON_MAX_DEPTH) -> float:
    def recurse(x0, x2, f0, f1, f2, whole, eps, depth):
        x1 = 0.5 * (x0 + x2)
        lm = 0.5 * (x0 + x1)
        rm = 0.5 * (x1 + x2)
        flm, frm = f(lm), f(rm)
        left = (x1 - x0) / 6.0 * (f0 + 4.0 * flm + f1)
        right = (x2 - x1) / 6.0 * (f1 + 4.0 * frm + f2)
        if depth >= max_depth or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(x0, x1, f0, flm, f1, left, eps / 2.0, depth + 1) + recurse(
            x1, x2, f1, frm, f2, right, eps / 2.0, depth + 1
        )

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def radial_modulus_integral(t0: float, t1: float, k_amp: float, m: float) -> ModulusCheck:
    """Integral of (1 - K t^m) / ((1 + K t^m) t) over [t0, t1], both ways.

    Closed form from the antiderivative log(t) - (2/m) log(1 + K t^m);
    numeric by adaptive Simpson. The residual is their difference.
    """
    if not (0.0 < t0 < t1 <= 1.0):
        raise DomainError(f"need 0 < t0 < t1 <= 1, got [{t0}, {t1}]")
    if k_amp < 0.0 or m < 1.0:
        raise DomainError("need K >= 0 and m >= 1")

    def antiderivative(t: float) -> float:
        return math.log(t) - (2.0 / m) * math.log1p(k_amp * t ** m)

    def integrand(t: float) -> float:
        ktm = k_amp * t ** m
        return (1.0 - ktm) / ((1.0 + ktm) * t)

    closed = antiderivative(t1) - antiderivative(t0)
    numeric = _adaptive_simpson(integrand, t0, t1)
    return ModulusCheck(
        params={"t0": t0, "t1": t1, "K_amp": k_amp, "m": m},
        closed_form=closed,
        numeric=numeric,
        residual=abs(closed - numeric),
    )


def slit_modulus_asymptotic(delta: float, epsilon: float) -> float:
    """Leading term log(4 delta / epsilon) / (2 pi) of the slit-domain modulus."""
    if not (0.0 < epsilon < delta):
        raise DomainError(f"need 0 < epsilon < delta, got eps={epsilon}, delta={delta}")
    return math.log(4.0 * delta / epsilon) / (2.0 * math.pi)


def slit_map_check(delta: float, n: int = 256) -> BoundReport:
    """Verify that 4 delta K(z) sends the unit circle onto the slit tip ray.

    At theta_j = 2 pi j / n (theta != 0) the image must be real with value
    at most -delta; the closed form -delta / sin^2(theta/2) is the target.
    """
    if delta <= 0.0:
        raise DomainError("delta must be positive")
    if n < 8:
        raise DomainError("need at least 8 samples")
    thetas = 2.0 * np.pi * np.arange(1, n) / n
    z = np.exp(1j * thetas)
    psi = 4.0 * delta * z / (1.0 - z) ** 2
    imag_max = float(np.max(np.abs(psi.imag)))
    excess = float(np.max(psi.real + delta))
    measured = max(imag_max, excess)
    j = int(np.argmax(np.maximum(np.abs(psi.imag), psi.real + delta)))
    return BoundReport(
        name="slit-map-boundary",
        inputs={"delta": delta, "n": n},
        value=1e-10,
        measured=measured,
        passed=bool(measured <= 1e-10),
        witness=complex(z[j]),
    )


def modulus_chain_check(k: float, a: float, m: float, epsilon: float, beta: float) -> ModulusCheck:
    """Both sides of the modulus inequality chain at finite (epsilon, beta).

    numeric is the annulus lower bound
    (2/m) log((1 + k a^m (beta eps)^m)/(1 + k a^m)) - log(beta eps);
    closed_form is the slit asymptotic log(4 delta* / eps) with
    delta* = 1 / (4 (1 + k a^m)^{2/m}). The gap (residual) tends to 0 as
    epsilon -> 0 and beta -> 1 jointly.
    """
    if not (0.0 < a < 1.0):
        raise DomainError("need 0 < a < 1")
    if not beta > 1.0:
        raise DomainError("need beta > 1")
    if not (epsilon > 0.0 and epsilon * beta < 0.1):
        raise DomainError("need epsilon > 0 with beta * epsilon < 0.1")
    if not (0.0 <= k <= 1.0) or m < 1.0:
        raise DomainError("need k in [0, 1] and m >= 1")
    kam = k * a ** m
    lhs = (2.0 / m) * (math.log1p(kam * (beta * epsilon) ** m) - math.log1p(kam)) - math.log(
        beta * epsilon
    )
    delta_star = 1.0 / (4.0 * (1.0 + kam) ** (2.0 / m))
    rhs = math.log(4.0 * delta_star / epsilon)
    return ModulusCheck(
        params={"k": k, "a": a, "m": m, "epsilon": epsilon, "beta": beta},
        closed_form=rhs,
        numeric=lhs,
        residual=abs(rhs - lhs),
    )
