"""Exact-order truncated power series with complex coefficients.

A series is the jet c_0 + c_1 z + ... + c_N z^N of an analytic germ at 0.
All operations are pure and return new instances; coefficient storage is a
read-only complex ndarray, so instances are safe to share across threads.

Division is long division (the standard recurrence
c_n = (a_n - sum_{j>=1} b_j c_{n-j}) / b_0), executed by scipy.signal.lfilter
so that high orders (10^5 and beyond, needed for evaluation close to the
unit circle) stay cheap.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.signal import lfilter

from .errors import DivisionByNonUnit

#: constant terms at or below this modulus are treated as zero in division
ZERO_TOL = 1e-14


class PowerSeries:
    """Truncated Taylor series sum_{n=0..N} c_n z^n of fixed order N."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray):
        arr = np.asarray(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        self._coeffs = arr

    # -- basic structure ------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, index = power."""
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def coefficient(self, n: int) -> complex:
        """c_n, or 0 beyond the truncation order."""
        if n < 0:
            raise IndexError("negative power")
        if n > self.order:
            return 0j
        return complex(self._coeffs[n])

    def padded(self, order: int) -> np.ndarray:
        """Coefficients zero-padded (or truncated) to the given order."""
        out = np.zeros(order + 1, dtype=np.complex128)
        k = min(order, self.order) + 1
        out[:k] = self._coeffs[:k]
        return out

    def truncated(self, order: int) -> "PowerSeries":
        return PowerSeries(self.padded(order))

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        # mismatched orders zero-pad: all series here are jets of germs
        n = max(self.order, other.order)
        return PowerSeries(self.padded(n) + other.padded(n))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = max(self.order, other.order)
        return PowerSeries(self.padded(n) - other.padded(n))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-self._coeffs)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return self.mul(other)

    def mul(self, other: "PowerSeries", order: int | None = None) -> "PowerSeries":
        """Cauchy product truncated to `order` (default: max input order)."""
        if order is None:
            order = max(self.order, other.order)
        full = np.convolve(self._coeffs, other._coeffs)
        out = np.zeros(order + 1, dtype=np.complex128)
        k = min(order + 1, full.size)
        out[:k] = full[:k]
        return PowerSeries(out)

    def div(self, other: "PowerSeries", order: int | None = None) -> "PowerSeries":
        """Series quotient q with q * other == self through `order`.

        Requires |other(0)| > ZERO_TOL. Quotient coefficients are exact up
        to the rounding already present in the operands; when denominator
        coefficients grow rapidly (the sheared-map case) that input rounding
        surfaces as absolute quotient noise of order eps * max|coefficient|.
        """
        b0 = other._coeffs[0]
        if abs(b0) <= ZERO_TOL:
            raise DivisionByNonUnit(
                f"division by series with constant term {b0!r}"
            )
        if order is None:
            order = max(self.order, other.order)
        num = self.padded(order)
        den = other._coeffs
        if den.size > order + 1:
            den = den[: order + 1]
        # lfilter([1], b, a) runs exactly the long-division recurrence
        return PowerSeries(lfilter([1.0 + 0j], den, num))

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "PowerSeries":
        """Termwise derivative; order drops by one (order 0 -> zero series)."""
        if self.order == 0:
            return PowerSeries([0j])
        n = np.arange(1, self.order + 1)
        return PowerSeries(self._coeffs[1:] * n)

    def antiderivative(self) -> "PowerSeries":
        """Termwise antiderivative with constant term 0; order grows by one."""
        n = np.arange(1, self.order + 2)
        out = np.zeros(self.order + 2, dtype=np.complex128)
        out[1:] = self._coeffs / n
        return PowerSeries(out)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, z: complex) -> complex:
        """Horner evaluation of the truncated polynomial at a point."""
        acc = 0j
        zc = complex(z)
        for c in self._coeffs[::-1]:
            acc = acc * zc + c
        return acc

    def eval_circle(self, r: float, n: int) -> np.ndarray:
        """Values at the n-th roots of unity scaled by r, i.e. z = r e^{2*pi*i j/n}.

        Folds c_k r^k modulo n and runs one FFT; exact (to roundoff) and O(N)
        even for very high orders.
        """
        scaled = self._coeffs * (float(r) ** np.arange(self._coeffs.size))
        pad = (-scaled.size) % n
        if pad:
            scaled = np.concatenate([scaled, np.zeros(pad, dtype=np.complex128)])
        folded = scaled.reshape(-1, n).sum(axis=0)
        return np.fft.ifft(folded) * n

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = max(self.order, other.order)
        return bool(np.array_equal(self.padded(n), other.padded(n)))

    def __hash__(self) -> int:
        return hash(self._coeffs.tobytes())

    def __repr__(self) -> str:
        head = np.array2string(self._coeffs[:4], precision=6, separator=", ")
        tail = ", ..." if self.order > 3 else ""
        return f"PowerSeries(order={self.order}, coeffs={head[:-1]}{tail}])"


def zero(order: int = 0) -> PowerSeries:
    return PowerSeries(np.zeros(order + 1, dtype=np.complex128))


def one(order: int = 0) -> PowerSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    return PowerSeries(c)


def identity(order: int = 1) -> PowerSeries:
    """The series of z itself."""
    if order < 1:
        raise ValueError("identity needs order >= 1")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    return PowerSeries(c)


def monomial(power: int, amplitude: complex = 1.0, order: int | None = None) -> PowerSeries:
    """amplitude * z^power as a series of the given order (default: power)."""
    if power < 0:
        raise ValueError("power must be non-negative")
    if order is None:
        order = power
    if order < power:
        raise ValueError("order must be at least the power")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[power] = complex(amplitude)
    return PowerSeries(c)
