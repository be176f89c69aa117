"""Laguerre polynomials ``L_n^alpha`` with exact coefficients for rational alpha."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from genint.scalar import pochhammer


def _exact(x):
    """Keep ints/Fractions exact; everything else becomes complex."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, (int, Fraction)):
        return x
    return complex(x)


@dataclass(frozen=True)
class LaguerrePoly:
    """``L_n^alpha(z) = sum_k coeffs[k] z^k``.

    ``coeffs`` holds Fractions when alpha is int/Fraction, complex otherwise.
    """

    degree: int
    alpha: object
    coeffs: tuple

    @property
    def exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __call__(self, z):
        return laguerre_eval(self, z)

    def derivative(self) -> tuple:
        return tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)


def laguerre_build(n: int, alpha) -> LaguerrePoly:
    """Coefficients ``(-1)^n (-alpha-n)_{n-k} / (k! (n-k)!)`` of ``z^k``."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    alpha = _exact(alpha)
    sign = (-1) ** n
    coeffs = []
    for k in range(n + 1):
        num = pochhammer(-alpha - n, n - k)
        den = math.factorial(k) * math.factorial(n - k)
        if isinstance(num, (int, Fraction)):
            coeffs.append(Fraction(sign * num, den))
        else:
            coeffs.append(sign * num / den)
    return LaguerrePoly(n, alpha, tuple(coeffs))


def laguerre_eval(p: LaguerrePoly, z):
    """Horner evaluation; exact when both coefficients and ``z`` are rational.

    Array ``z`` gives a complex ndarray.
    """
    if hasattr(z, "shape"):
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in reversed(p.coeffs):
            acc = acc * z + complex(c)
        return acc
    if not isinstance(z, (int, Fraction)) or not p.exact:
        z = complex(z)
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def _falling(x, k: int):
    out = 1
    for j in range(k):
        out = out * (x - j)
    return out


def rodrigues_coefficients(n: int, alpha) -> tuple:
    """Coefficients of ``(1/n!) e^z z^{-alpha} d^n/dz^n [e^{-z} z^{n+alpha}]`` via Leibniz.

    ``d^n (e^{-z} z^beta) = sum_j C(n,j) (-1)^{n-j} beta^(j falling) z^{beta-j} e^{-z}``,
    so the coefficient of ``z^{n-j}`` is ``C(n,j) (-1)^{n-j} (n+alpha)^(j falling) / n!``.
    """
    alpha = _exact(alpha)
    beta = n + alpha
    out = [0] * (n + 1)
    for j in range(n + 1):
        val = math.comb(n, j) * (-1) ** (n - j) * _falling(beta, j)
        if isinstance(val, (int, Fraction)):
            out[n - j] = Fraction(val, math.factorial(n))
        else:
            out[n - j] = val / math.factorial(n)
    return tuple(out)


def rodrigues_check(n: int, alpha, z=None) -> bool:
    """Compare the Rodrigues-formula expansion with :func:`laguerre_build` exactly."""
    alpha = _exact(alpha)
    if not isinstance(alpha, (int, Fraction)):
        raise TypeError("rodrigues_check needs a rational alpha")
    rod = rodrigues_coefficients(n, alpha)
    poly = laguerre_build(n, alpha)
    if tuple(rod) != poly.coeffs:
        return False
    if z is not None:
        z = Fraction(z)
        lhs = sum(c * z ** k for k, c in enumerate(rod))
        return lhs == laguerre_eval(poly, z)
    return True


def special_alpha_identity(n: int, alpha_pos: int, z):
    """Both sides of ``L_n^{-a}(z) = (n-a)!/n! (-z)^a L_{n-a}^a(z)``, ``1 <= a <= n``."""
    if not 1 <= alpha_pos <= n:
        raise ValueError("need 1 <= alpha_pos <= n")
    lhs = laguerre_eval(laguerre_build(n, -alpha_pos), z)
    fac = Fraction(math.factorial(n - alpha_pos), math.factorial(n))
    rhs = fac * (-z) ** alpha_pos * laguerre_eval(laguerre_build(n - alpha_pos, alpha_pos), z)
    return lhs, rhs


# -- truncated power series in t (generating functions) ---------------------

def _series_mul(p, q, order):
    out = [0] * (order + 1)
    for i, a in enumerate(p[: order + 1]):
        if a == 0:
            continue
        for j, b in enumerate(q[: order + 1 - i]):
            out[i + j] += a * b
    return out


def _series_exp(p, order):
    """exp of a power series with zero constant term: ``E' = p' E``."""
    if p[0] != 0:
        raise ValueError("constant term must vanish")
    e = [0] * (order + 1)
    e[0] = Fraction(1) if all(isinstance(c, (int, Fraction)) for c in p) else 1.0
    for n in range(1, order + 1):
        s = 0
        for k in range(1, n + 1):
            if k < len(p):
                s += k * p[k] * e[n - k]
        e[n] = s / n if not isinstance(s, int) else Fraction(s, n)
    return e


def _binomial_series(alpha, order):
    """Taylor coefficients of ``(1+t)^alpha``."""
    out = [Fraction(1) if isinstance(alpha, (int, Fraction)) else 1.0]
    for k in range(1, order + 1):
        out.append(out[-1] * (alpha - k + 1) / k)
    return out


def generating_function_coefficients(kind: int, alpha, z, order: int) -> list:
    """Taylor coefficients in ``t`` of one of the two generating functions.

    ``kind=1``: ``e^{-tz} (1+t)^alpha``; ``kind=2``: ``(1-t)^{-alpha-1} exp(tz/(t-1))``.
    """
    alpha = _exact(alpha)
    z = _exact(z)
    if kind == 1:
        ez = _series_exp([0, -z] + [0] * (order - 1), order)
        return _series_mul(ez, _binomial_series(alpha, order), order)
    if kind == 2:
        # (1-t)^{-alpha-1}: substitute t -> -t in (1+t)^{-alpha-1}
        b = _binomial_series(-alpha - 1, order)
        b = [c * (-1) ** k for k, c in enumerate(b)]
        # tz/(t-1) = -z (t + t^2 + ...)
        arg = [0] + [-z] * order
        return _series_mul(b, _series_exp(arg, order), order)
    raise ValueError("kind must be 1 or 2")


def generating_function_sums(kind: int, alpha, z, order: int) -> list:
    """The polynomial side: ``L_n^{alpha-n}(z)`` (kind 1) or ``L_n^alpha(z)`` (kind 2)."""
    alpha = _exact(alpha)
    z = _exact(z)
    if kind == 1:
        return [laguerre_eval(laguerre_build(n, alpha - n), z) for n in range(order + 1)]
    return [laguerre_eval(laguerre_build(n, alpha), z) for n in range(order + 1)]
