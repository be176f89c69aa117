"""Closed-form bilinear integrals of Tricomi functions and the Laguerre Gram matrix.

Every formula is written with entire combinations (``1/Gamma``,
``psi/Gamma``, ...) so that Laguerre-type parameters, where individual
Gamma factors have poles, need no limiting procedure.  Notation used in the
integer-``alpha`` formulas with ``M = |alpha|``::

    x = (1 + theta + M)/2,   y = x - M = (1 + theta - M)/2.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from genint.scalar import (
    PoleError,
    digamma,
    gamma,
    harmonic_rgamma,
    pochhammer,
    pochhammer_weighted_harmonic,
    psi2_rgamma,
    psi_rgamma,
    rgamma,
    trigamma_rgamma2,
)

THETA_EPS = 1e-6
ALPHA_EPS = 1e-8


def _nearest_int(alpha: complex):
    alpha = complex(alpha)
    m = round(alpha.real)
    return int(m), abs(alpha - m)


# -- Tricomi bilinear integrals ---------------------------------------------

def _generic(theta1, theta2, alpha):
    """Non-integer alpha, distinct thetas."""
    a1, b1 = (1 + alpha + theta1) / 2, (1 - alpha + theta1) / 2
    a2, b2 = (1 + alpha + theta2) / 2, (1 - alpha + theta2) / 2
    pref = 2 * math.pi / ((theta1 - theta2) * cmath.sin(math.pi * alpha))
    return pref * (rgamma(b1) * rgamma(a2) - rgamma(b2) * rgamma(a1))


def _generic_equal(theta, alpha):
    """Non-integer alpha, equal thetas."""
    a, b = (1 + alpha + theta) / 2, (1 - alpha + theta) / 2
    pref = math.pi / cmath.sin(math.pi * alpha)
    return pref * (psi_rgamma(a) * rgamma(b) - psi_rgamma(b) * rgamma(a))


def _anomalous(theta1, theta2, M: int):
    """Integer ``alpha = +-M``, distinct thetas (as printed, in entire form)."""
    s = (-1) ** M
    x1, x2 = (1 + theta1 + M) / 2, (1 + theta2 + M) / 2
    y1, y2 = x1 - M, x2 - M

    def bracket(ya, xb):
        return (2 * psi_rgamma(ya) + harmonic_rgamma(ya, M)) * rgamma(xb)

    t1 = s / (theta1 - theta2) * (bracket(y1, x2) - bracket(y2, x1))
    acc = 0j
    for k in range(M):
        head = pochhammer(y1, k)
        z2 = y2 + 1 + k
        p2 = pochhammer(z2, M - 1 - k)
        acc += head * p2 * (-digamma(M - k) - digamma(k + 1))
        acc += 0.5 * pochhammer_weighted_harmonic(y1, k) * p2
        acc -= 0.5 * head * pochhammer_weighted_harmonic(z2, M - 1 - k)
    t2 = s * rgamma(x1) * rgamma(x2) * acc
    return t1 + t2


def _anomalous_equal(theta, M: int):
    """Integer ``alpha = +-M``, equal thetas."""
    s = (-1) ** M
    x = (1 + theta + M) / 2
    y = x - M
    rx = rgamma(x)
    out = pochhammer(y, M) * (psi_rgamma(x) ** 2 + trigamma_rgamma2(x))
    out += rx * psi2_rgamma(y)
    acc = 0j
    for k in range(M):
        acc += pochhammer(y, k) * rgamma(y + k + 1) * (digamma(M - k) + digamma(k + 1))
    out -= 2 * rx * acc
    return 0.5 * s * out


def tricomi_bilinear(theta1, theta2, alpha) -> complex:
    """``gen_int_0^inf U_{theta1,alpha} U_{theta2,alpha} e^{-z} z^alpha dz``.

    Dispatches on ``|theta1 - theta2| < THETA_EPS`` (equal-theta formula at
    the midpoint) and ``dist(alpha, Z) < ALPHA_EPS`` (anomalous formulas with
    ``|alpha|``).  For ``|Re alpha| < 1`` this is an ordinary integral.
    """
    theta1, theta2, alpha = complex(theta1), complex(theta2), complex(alpha)
    m, dist = _nearest_int(alpha)
    equal = abs(theta1 - theta2) < THETA_EPS
    if dist < ALPHA_EPS:
        M = abs(m)
        if equal:
            return _anomalous_equal((theta1 + theta2) / 2, M)
        return _anomalous(theta1, theta2, M)
    if equal:
        return _generic_equal((theta1 + theta2) / 2, alpha)
    return _generic(theta1, theta2, alpha)


def tricomi_bilinear_finite_part(theta1, theta2, m: int) -> complex:
    """Finite part at ``alpha = -m`` of the prefactored family.

    The family is ``int Gamma((1+theta1-alpha)/2) Gamma((1+theta2-alpha)/2)
    U_{theta1,alpha} U_{theta2,alpha} e^{-z} z^alpha dz`` and the value is

        (-1)^m/(theta1-theta2) [ (y1)_m (psi(x1) + psi(y1)) - (1 <-> 2) ].

    Raises
    ------
    ValueError
        Coincident thetas or ``m < 1``.
    PoleError
        ``x_i`` at a pole of Gamma (the prefactor itself diverges).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    theta1, theta2 = complex(theta1), complex(theta2)
    if abs(theta1 - theta2) < THETA_EPS:
        raise ValueError("finite-part formula needs distinct thetas")

    def part(theta):
        x = (1 + theta + m) / 2
        y = x - m
        # (y)_m psi(y) = Gamma(x) psi(y)/Gamma(y)
        return pochhammer(y, m) * digamma(x) + gamma(x) * psi_rgamma(y)

    return (-1) ** m / (theta1 - theta2) * (part(theta1) - part(theta2))


# -- Laguerre Gram matrix ---------------------------------------------------

class Regime(enum.Enum):
    Classical = "classical"
    ReducedClassical = "reduced-classical"
    Anomalous = "anomalous"


def _neg_int(alpha: complex):
    m, dist = _nearest_int(alpha)
    if dist < ALPHA_EPS and m < 0:
        return -m
    return None


def laguerre_gram_entry(m: int, n: int, alpha) -> tuple[complex, Regime]:
    """``gen_int L_m^alpha L_n^alpha z^alpha e^{-z} dz`` and its regime."""
    if m < 0 or n < 0:
        raise ValueError("degrees must be >= 0")
    alpha = complex(alpha)
    M = _neg_int(alpha)
    if M is None:
        val = gamma(1 + alpha + n) / math.factorial(n) if m == n else 0j
        return complex(val), Regime.Classical
    if min(m, n) >= M:
        val = math.factorial(n - M) / math.factorial(n) if m == n else 0.0
        return complex(val), Regime.ReducedClassical
    m, n = max(m, n), min(m, n)
    den = math.factorial(n) * math.factorial(M - n - 1)
    if m > n:
        return complex((-1) ** (M + n) / (den * (m - n))), Regime.Anomalous
    return complex((-1) ** (M + n + 1) * digamma(M - n) / den), Regime.Anomalous


@dataclass
class GramMatrix:
    alpha: complex
    dim: int
    entries: np.ndarray
    regime: list

    def is_symmetric(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.entries - self.entries.T) <= tol))


def gram_matrix(alpha, N: int) -> GramMatrix:
    """Generalized Gram matrix ``G(alpha)`` of ``L_0^alpha .. L_{N-1}^alpha``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    entries = np.zeros((N, N), dtype=complex)
    regime = [[None] * N for _ in range(N)]
    for i in range(N):
        for j in range(i, N):
            val, reg = laguerre_gram_entry(i, j, alpha)
            entries[i, j] = entries[j, i] = val
            regime[i][j] = regime[j][i] = reg
    return GramMatrix(complex(alpha), N, entries, regime)


__all__ = [
    "GramMatrix",
    "PoleError",
    "Regime",
    "gram_matrix",
    "laguerre_gram_entry",
    "tricomi_bilinear",
    "tricomi_bilinear_finite_part",
]
