"""Anomalous generalized integrals by analytic continuation in alpha.

A family ``alpha -> gen_int f(r, alpha) dr`` has simple poles at
``alpha = -m`` with residue ``f_{m-1}(-m)``, the coefficient of ``r^{-1}``.
The anomalous value at ``alpha = -m`` is the finite part there minus the
alpha-derivative of that coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from genint.closed_forms import tricomi_bilinear
from genint.expansions import laguerre_pair_coefficients, tricomi_pair_coefficient
from genint.scalar import gamma, rgamma

EPS = 1e-3
DERIV_STEP = 1e-4


class DimRegError(ArithmeticError):
    """The epsilon extrapolation did not settle."""


@dataclass(frozen=True)
class AlphaFamily:
    """An alpha-family of generalized integrals.

    Attributes
    ----------
    value_at : callable
        ``alpha -> gen_int f(r, alpha) dr`` away from the poles.
    coeff_at : callable
        ``(alpha, n) -> f_n(alpha)``, the coefficient of ``r^{alpha+n}``.
    coeff_derivative : callable, optional
        ``(alpha, n) -> d f_n/d alpha``; numeric differences are used if absent.
    """

    value_at: Callable
    coeff_at: Callable
    coeff_derivative: Optional[Callable] = None


def _sym(fam: AlphaFamily, m: int, eps: float) -> complex:
    return 0.5 * (complex(fam.value_at(-m + eps)) + complex(fam.value_at(-m - eps)))


def finite_part(fam: AlphaFamily, m: int, eps: float = EPS, *, return_error: bool = False):
    """Finite part of ``fam.value_at`` at ``alpha = -m``.

    The two-sided average at ``-m +- eps`` cancels the pole exactly; its
    ``O(eps^2)`` error is removed by one Richardson step with ``eps/2``.
    """
    s1 = _sym(fam, m, eps)
    s2 = _sym(fam, m, eps / 2)
    fp = (4 * s2 - s1) / 3
    err = abs(fp - s2)
    if not math.isfinite(abs(fp)):
        raise DimRegError("finite part is not finite")
    return (fp, err) if return_error else fp


def residue(fam: AlphaFamily, m: int, eps: float = EPS) -> complex:
    """Residue at ``alpha = -m`` from the antisymmetric part, with Richardson."""

    def r(e):
        return 0.5 * e * (complex(fam.value_at(-m + e)) - complex(fam.value_at(-m - e)))

    return (4 * r(eps / 2) - r(eps)) / 3


def coefficient_derivative(fam: AlphaFamily, alpha: float, n: int, h: float = DERIV_STEP) -> complex:
    """``d f_n / d alpha`` at ``alpha``: analytic if available, else central differences."""
    if fam.coeff_derivative is not None:
        return complex(fam.coeff_derivative(alpha, n))

    def d(step):
        return (complex(fam.coeff_at(alpha + step, n)) - complex(fam.coeff_at(alpha - step, n))) / (2 * step)

    return (4 * d(h / 2) - d(h)) / 3


def anomalous_value(fam: AlphaFamily, m: int, eps: float = EPS) -> complex:
    """``gen_int f(r, -m) dr = fp - d/d alpha f_{m-1}(alpha) |_{alpha=-m}``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return finite_part(fam, m, eps) - coefficient_derivative(fam, -m, m - 1)


# -- concrete families -------------------------------------------------------

def gamma_family() -> AlphaFamily:
    """``gen_int z^alpha e^{-z} dz = Gamma(1 + alpha)``; ``f_n = (-1)^n/n!``."""
    return AlphaFamily(
        value_at=lambda a: gamma(1 + a),
        coeff_at=lambda a, n: (-1) ** n / math.factorial(n),
        coeff_derivative=lambda a, n: 0.0,
    )


def tricomi_family(theta1, theta2) -> AlphaFamily:
    """Prefactored Tricomi pair: ``Gamma(b1) Gamma(b2) U U e^{-z} z^alpha``, ``b = (1+theta-alpha)/2``.

    Values come from the non-integer closed form, coefficients from the
    small-z expansion.
    """
    t1, t2 = complex(theta1), complex(theta2)

    def pref(a):
        return gamma((1 + t1 - a) / 2) * gamma((1 + t2 - a) / 2)

    def value(a):
        return pref(a) * tricomi_bilinear(t1, t2, a)

    def coeff(a, n):
        return pref(a) * tricomi_pair_coefficient(t1, t2, a, n)

    return AlphaFamily(value, coeff)


def tricomi_anomalous_value(theta1, theta2, m: int, eps: float = EPS) -> complex:
    """Raw Tricomi-pair generalized integral at ``alpha = -m`` via the prefactored family."""
    fam = tricomi_family(theta1, theta2)
    val = anomalous_value(fam, m, eps)
    return val * rgamma((1 + complex(theta1) + m) / 2) * rgamma((1 + complex(theta2) + m) / 2)


def laguerre_family(m: int, n: int) -> AlphaFamily:
    """``gen_int L_m^alpha L_n^alpha z^alpha e^{-z} dz = Gamma(1+n+alpha)/n! delta_mn``."""

    def value(a):
        return gamma(1 + n + a) / math.factorial(n) if m == n else 0.0

    def coeff(a, j):
        return complex(laguerre_pair_coefficients(m, n, complex(a), j)[j])

    return AlphaFamily(value, coeff)


def laguerre_anomalous_value(m: int, n: int, M: int, eps: float = EPS) -> complex:
    """Laguerre Gram entry at ``alpha = -M`` by dimensional regularization."""
    return anomalous_value(laguerre_family(m, n), M, eps)
