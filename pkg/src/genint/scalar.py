"""Gamma family, Pochhammer symbols and harmonic numbers for complex arguments.

The gamma family uses upward recurrence until ``Re(z) >= 10`` followed by the
Stirling/Bernoulli asymptotic series.  Integer and :class:`fractions.Fraction`
inputs to :func:`pochhammer` and :func:`harmonic` stay exact.

Besides the plain functions this module exposes a few *entire* combinations
(``psi_rgamma``, ``trigamma_rgamma2``, ``psi2_rgamma``) which stay finite at
the poles of Gamma; the closed-form integrals are written in terms of them so
that Laguerre-type parameters need no special casing.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

EULER_GAMMA = 0.57721566490153286060651209008240243
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SHIFT = 10.0

# B_2, B_4, ..., B_20
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)
_LNGAMMA_COEF = tuple(float(b) / ((2 * k + 2) * (2 * k + 1)) for k, b in enumerate(_BERNOULLI))
_DIGAMMA_COEF = tuple(float(b) / (2 * k + 2) for k, b in enumerate(_BERNOULLI))
_TRIGAMMA_COEF = tuple(float(b) for b in _BERNOULLI)


class PoleError(ArithmeticError):
    """Raised when a function is evaluated at one of its poles."""


def _pole_index(z, tol: float = 0.0):
    """Return ``k`` if ``z == -k`` for a non-negative integer ``k``, else None."""
    z = complex(z)
    if abs(z.imag) > tol or z.real > 0.5:
        return None
    k = round(-z.real)
    if abs(z.real + k) <= tol:
        return int(k)
    return None


def _shift_count(z: complex) -> int:
    return max(0, math.ceil(_SHIFT - z.real))


def ln_gamma(z) -> complex:
    """Log-gamma on the principal branch.

    For real negative non-integer ``z`` the imaginary part is ``pi`` times the
    number of negative factors removed by the recurrence, so that
    ``exp(ln_gamma(z)) == gamma(z)`` always holds.
    """
    z = complex(z)
    if _pole_index(z) is not None:
        raise PoleError(f"ln_gamma has a pole at {z}")
    n = _shift_count(z)
    shift = 0j
    if z.imag == 0.0:
        x = z.real
        neg = 0
        acc = 0.0
        for j in range(n):
            t = x + j
            if t < 0:
                neg += 1
            acc += math.log(abs(t))
        shift = complex(acc, math.pi * neg)
    else:
        for j in range(n):
            shift += cmath.log(z + j)
    w = z + n
    inv = 1.0 / w
    inv2 = inv * inv
    series = 0j
    p = inv
    for c in _LNGAMMA_COEF:
        series += c * p
        p *= inv2
    stirling = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI + series
    return stirling - shift


def gamma(z) -> complex:
    """Gamma function; raises :class:`PoleError` at non-positive integers."""
    z = complex(z)
    val = cmath.exp(ln_gamma(z))
    if z.imag == 0.0:
        return complex(val.real, 0.0)
    return val


def rgamma(z) -> complex:
    """Reciprocal gamma ``1/Gamma(z)``, an entire function (zero at the poles)."""
    z = complex(z)
    if _pole_index(z) is not None:
        return 0j
    val = cmath.exp(-ln_gamma(z))
    if z.imag == 0.0:
        return complex(val.real, 0.0)
    return val


def digamma(z) -> complex:
    """The digamma function psi(z)."""
    z = complex(z)
    if _pole_index(z) is not None:
        raise PoleError(f"digamma has a pole at {z}")
    n = _shift_count(z)
    acc = 0j
    for j in range(n):
        acc += 1.0 / (z + j)
    w = z + n
    inv = 1.0 / w
    inv2 = inv * inv
    series = 0j
    p = inv2
    for c in _DIGAMMA_COEF:
        series += c * p
        p *= inv2
    return cmath.log(w) - 0.5 * inv - series - acc


def trigamma(z) -> complex:
    """The trigamma function psi'(z)."""
    z = complex(z)
    if _pole_index(z) is not None:
        raise PoleError(f"trigamma has a pole at {z}")
    n = _shift_count(z)
    acc = 0j
    for j in range(n):
        acc += 1.0 / (z + j) ** 2
    w = z + n
    inv = 1.0 / w
    inv2 = inv * inv
    series = 0j
    p = inv2 * inv
    for c in _TRIGAMMA_COEF:
        series += c * p
        p *= inv2
    return inv + 0.5 * inv2 + series + acc


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``.

    Exact for ``int`` and ``Fraction`` arguments, complex otherwise.
    """
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    if not isinstance(a, (int, Fraction)):
        a = complex(a)
    out = 1
    for j in range(n):
        out = out * (a + j)
    return out


def harmonic(a, k: int):
    """``H_k(a) = sum_{j<k} 1/(a+j)``; exact for int/Fraction input."""
    if k < 0:
        raise ValueError("harmonic requires k >= 0")
    exact = isinstance(a, (int, Fraction))
    if not exact:
        a = complex(a)
    out = Fraction(0) if exact else 0j
    for j in range(k):
        d = a + j
        if d == 0:
            raise PoleError(f"H_{k}({a}) has a vanishing denominator")
        out += (Fraction(1) / d) if exact else 1.0 / d
    return out


def harmonic_derivative(a, k: int) -> complex:
    """d/da H_k(a) = -sum_{j<k} 1/(a+j)^2."""
    a = complex(a)
    return -sum(1.0 / (a + j) ** 2 for j in range(k))


def pochhammer_weighted_harmonic(z, k: int):
    """``(z)_k H_k(z)`` as the product-sum ``sum_j prod_{l != j} (z+l)``.

    Finite even when ``(z)_k`` has a vanishing factor.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not isinstance(z, (int, Fraction)):
        z = complex(z)
    total = 0
    for j in range(k):
        prod = 1
        for l in range(k):
            if l != j:
                prod = prod * (z + l)
        total = total + prod
    return total


# -- entire combinations ----------------------------------------------------

def psi_rgamma(z) -> complex:
    """``psi(z)/Gamma(z)``; equals ``(-1)^(k+1) k!`` at ``z = -k``."""
    k = _pole_index(z)
    if k is not None:
        return complex((-1) ** (k + 1) * math.factorial(k))
    return digamma(z) * rgamma(z)


def trigamma_rgamma2(z) -> complex:
    """``psi'(z)/Gamma(z)^2``; equals ``(k!)^2`` at ``z = -k``."""
    k = _pole_index(z)
    if k is not None:
        return complex(math.factorial(k) ** 2)
    r = rgamma(z)
    return trigamma(z) * r * r


def psi2_rgamma(z) -> complex:
    """``(psi'(z) - psi(z)^2)/Gamma(z)`` without cancellation near the poles.

    Shifts ``z`` by ``n`` so that ``Re(z+n) >= 1`` using

        G(z) = (z)_n G(z+n) + 2 sum_{j=1}^{n} (z)_{j-1} psi(z+j)/Gamma(z+j).
    """
    z = complex(z)
    n = max(0, math.ceil(1.0 - z.real))
    w = z + n
    head = pochhammer(z, n)
    val = 0j
    if head != 0:
        val = head * (trigamma(w) - digamma(w) ** 2) * rgamma(w)
    acc = 0j
    for j in range(1, n + 1):
        acc += pochhammer(z, j - 1) * psi_rgamma(z + j)
    return val + 2.0 * acc


def harmonic_rgamma(y, M: int) -> complex:
    """``H_M(y)/Gamma(y) = sum_{j<M} (y)_j / Gamma(y+j+1)``, entire in ``y``."""
    y = complex(y)
    return sum(pochhammer(y, j) * rgamma(y + j + 1) for j in range(M))


def lemma_b2_values(n: int) -> tuple[complex, complex]:
    """Limits of ``psi'/Gamma^2`` and ``(psi' - psi^2)/Gamma`` at ``z = -n``.

    Returns ``((n!)^2, (-1)^n 2 n! psi(1+n))``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    f = math.factorial(n)
    return complex(f * f), (-1) ** n * 2.0 * f * digamma(1 + n)
