"""Small-z singular expansions of the bilinear integrands.

Two integrand families are covered:

* Tricomi pair ``U_{theta1,alpha}(z) U_{theta2,alpha}(z) e^{-z} z^alpha``;
* Laguerre pair ``L_m^alpha(z) L_n^alpha(z) e^{-z} z^alpha``.

Besides the coefficients themselves, :func:`pair_integrand` returns a
cancellation-free evaluator of "integrand minus subtracted terms" built from
the power-series structure of each factor, which is what makes finite parts
of strongly singular integrands accurate.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from genint.confluent import (
    LieParams,
    bF_coefficients,
    degenerate_parts,
    tricomi_U_array,
)
from genint.genquad import GenIntegralResult, QuadratureConfig, SingularExpansion, gen_integrate
from genint.laguerre import laguerre_build
from genint.scalar import gamma, pochhammer, rgamma

INT_TOL = 1e-12
N_SERIES = 48


def _int_alpha(alpha: complex) -> Optional[int]:
    alpha = complex(alpha)
    if abs(alpha.imag) > INT_TOL:
        return None
    m = round(alpha.real)
    return int(m) if abs(alpha.real - m) <= INT_TOL else None


def _mu(alpha: complex) -> complex:
    """``-alpha`` or ``alpha`` so that the real part is >= 0 (integrand is even in alpha)."""
    alpha = complex(alpha)
    return -alpha if alpha.real < 0 else alpha


def tricomi_pair_coefficient(theta1, theta2, alpha, p: int) -> complex:
    """Coefficient of ``z^{alpha+p}`` in ``U_{theta1,alpha} U_{theta2,alpha} e^{-z} z^alpha``.

    Uses

        rg(b1) rg(b2) sum_k (-1)^k (a1)_k (1+alpha-a2)_{p-k}
            Gamma(-alpha-k) Gamma(-alpha-p+k) / (k! (p-k)!)

    with ``a_i, b_i`` the Kummer parameters of ``(theta_i, alpha)``.  Since the
    integrand is even in ``alpha``, ``Re(alpha) > 0`` is mapped to ``-alpha``.

    The formula is the complete coefficient for ``p < 2|alpha|``; from there
    on the ``z^{|alpha|}`` parts of the factors contribute as well.  For
    integer ``alpha = -M`` it is finite (and complete) for ``p <= M - 1``.

    Raises
    ------
    ValueError
        ``p`` outside the range where the formula is valid.
    """
    alpha = -_mu(alpha)
    mu = -alpha
    if p < 0:
        raise ValueError("p must be >= 0")
    M = _int_alpha(alpha)
    if M is not None:
        if p > -M - 1:
            raise ValueError(f"integer alpha={M}: the coefficient formula needs p <= {-M - 1}")
    elif p >= 2 * mu.real:
        raise ValueError(f"p={p} is beyond the range p < 2|alpha| of the coefficient formula")
    q1 = LieParams(theta1, alpha)
    q2 = LieParams(theta2, alpha)
    c = 1 + alpha
    total = 0j
    for k in range(p + 1):
        total += (
            (-1) ** k
            * pochhammer(q1.a, k)
            * pochhammer(c - q2.a, p - k)
            * gamma(-alpha - k)
            * gamma(-alpha - p + k)
            / (math.factorial(k) * math.factorial(p - k))
        )
    return total * rgamma(q1.b) * rgamma(q2.b)


def tricomi_pair_min_order(alpha) -> int:
    """Largest ``p`` whose term ``z^{alpha+p}`` is non-integrable (``-1`` if none)."""
    mu = _mu(alpha).real
    M = _int_alpha(alpha)
    if M is not None:
        return abs(M) - 1
    return math.ceil(mu - 1) - 1 if mu > 1 else -1


def tricomi_pair_expansion(theta1, theta2, alpha, order: Optional[int] = None) -> SingularExpansion:
    """Terms ``p = 0..order`` of the Tricomi-pair expansion (default: the minimal set)."""
    if order is None:
        order = tricomi_pair_min_order(alpha)
    a = -_mu(alpha)
    return SingularExpansion(tuple((a + p, tricomi_pair_coefficient(theta1, theta2, a, p))
                                   for p in range(order + 1)))


# -- Laguerre pair ----------------------------------------------------------

def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _exp_neg_coeffs(n: int, exact: bool):
    out = []
    f = 1
    for i in range(n):
        if i:
            f *= i
        out.append(Fraction((-1) ** i, f) if exact else (-1) ** i / f)
    return out


def laguerre_pair_coefficients(m: int, n: int, alpha, order: int) -> list:
    """Coefficients ``c_j`` of ``z^{alpha+j}``, ``j = 0..order``; exact for rational alpha."""
    if order < 0:
        raise ValueError("order must be >= 0")
    P = _poly_mul(laguerre_build(m, alpha).coeffs, laguerre_build(n, alpha).coeffs)
    exact = all(isinstance(c, (int, Fraction)) for c in P)
    ex = _exp_neg_coeffs(order + 1, exact)
    out = []
    for j in range(order + 1):
        s = 0
        for i in range(min(j, len(P) - 1) + 1):
            s += P[i] * ex[j - i]
        out.append(s)
    return out


def laguerre_pair_expansion(m: int, n: int, alpha, order: int) -> SingularExpansion:
    """Expansion ``{(alpha+j, c_j)}``, ``j = 0..order``, with zero coefficients dropped."""
    coeffs = laguerre_pair_coefficients(m, n, alpha, order)
    a = complex(alpha)
    return SingularExpansion(tuple((a + j, complex(c)) for j, c in enumerate(coeffs) if c != 0))


def laguerre_pair_min_order(alpha) -> int:
    """Largest ``j`` with ``Re(alpha) + j <= -1``."""
    return math.floor(-complex(alpha).real - 1 + INT_TOL)


# -- integrands with stable remainders --------------------------------------

class PairKind(enum.Enum):
    TricomiPair = "tricomi"
    LaguerrePair = "laguerre"


@dataclass(frozen=True)
class BilinearIntegrandSpec:
    """Which integrand, its parameters and how many expansion terms to subtract.

    ``params`` is ``(theta1, theta2, alpha)`` for the Tricomi pair and
    ``(m, n, alpha)`` for the Laguerre pair.  ``order`` is the largest
    power offset ``p`` subtracted; ``None`` means the minimal one.
    """

    kind: PairKind
    params: tuple
    order: Optional[int] = None


@dataclass
class PairIntegrand:
    """Vectorized integrand, its subtracted expansion and the stable remainder."""

    f: Callable
    expansion: SingularExpansion
    remainder: Optional[Callable]

    def integrate(self, cfg: Optional[QuadratureConfig] = None) -> GenIntegralResult:
        return gen_integrate(self.f, self.expansion, cfg, remainder=self.remainder,
                             vectorized=True)


def _series_eval(coeffs, z):
    """Horner for ascending coefficients; ``z`` may be an ndarray."""
    acc = np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _cauchy(p, q, n):
    out = [0j] * n
    for i, a in enumerate(p[:n]):
        if a == 0:
            continue
        for j, b in enumerate(q[: n - i]):
            out[i + j] += a * b
    return out


def _with_exp(p, n):
    return _cauchy(list(p), _exp_neg_coeffs(n, exact=False), n)


def _zpow(z, k: complex):
    if k.imag == 0.0:
        return z ** k.real
    return np.exp(k * np.log(z))


def _laguerre_integrand(m, n, alpha, order) -> PairIntegrand:
    alpha = complex(alpha) if not isinstance(alpha, (int, Fraction)) else alpha
    lm = laguerre_build(m, alpha)
    ln = laguerre_build(n, alpha)
    a = complex(alpha)
    P = [complex(c) for c in _poly_mul(lm.coeffs, ln.coeffs)]
    full = _with_exp(P, len(P) + N_SERIES)
    if order is None:
        order = laguerre_pair_min_order(a)
    exp0 = laguerre_pair_expansion(m, n, alpha, order) if order >= 0 else SingularExpansion()
    tail = [0j] * (order + 1) + full[order + 1:] if order >= 0 else full

    def f(z):
        return _series_eval(P, z) * np.exp(-z) * _zpow(z, a)

    def rem(z):
        return _zpow(z, a) * _series_eval(tail, z)

    return PairIntegrand(f, exp0, rem)


def _noninteger_tricomi_parts(theta, alpha):
    """``U = S0(z) + z^mu S1(z)`` for ``alpha = -mu``, as series coefficients."""
    q = LieParams(theta, alpha)
    K = math.pi / cmath.sin(math.pi * alpha)
    s0 = [-K * rgamma(q.b) * c for c in bF_coefficients(q.a, 1 + alpha, N_SERIES)]
    s1 = [K * rgamma(q.a) * c for c in bF_coefficients(q.b, 1 - alpha, N_SERIES)]
    return s0, s1


def _tricomi_integrand(theta1, theta2, alpha, order) -> PairIntegrand:
    alpha = complex(alpha)
    q1 = LieParams(theta1, alpha)
    q2 = LieParams(theta2, alpha)

    def f(z):
        z = np.asarray(z, dtype=float)
        return tricomi_U_array(q1, z) * tricomi_U_array(q2, z) * np.exp(-z) * _zpow(z, alpha)

    a = -_mu(alpha)
    mu = -a
    M = _int_alpha(a)
    if order is None:
        order = tricomi_pair_min_order(a)
    exp0 = tricomi_pair_expansion(theta1, theta2, a, order) if order >= 0 else SingularExpansion()
    if order < 0 and (mu.real < 1 or M == 0):
        return PairIntegrand(f, exp0, None)
    n = N_SERIES
    ex = _exp_neg_coeffs(n, exact=False)

    if M is None:
        s01, s11 = _noninteger_tricomi_parts(theta1, a)
        s02, s12 = _noninteger_tricomi_parts(theta2, a)
        b00 = _cauchy(_cauchy(s01, s02, n), ex, n)
        mid = _cauchy(_cauchy(s01, s12, n), ex, n)
        mid2 = _cauchy(_cauchy(s11, s02, n), ex, n)
        mid = [x + y for x, y in zip(mid, mid2)]
        b11 = _cauchy(_cauchy(s11, s12, n), ex, n)
        b00_tail = [0j] * (order + 1) + b00[order + 1:]

        def rem(z):
            return (_zpow(z, a) * _series_eval(b00_tail, z) + _series_eval(mid, z)
                    + _zpow(z, mu) * _series_eval(b11, z))

        return PairIntegrand(f, exp0, rem)

    Mi = -M
    d1 = degenerate_parts(theta1, Mi, terms=n)
    d2 = degenerate_parts(theta2, Mi, terms=n)
    P1 = list(d1.p) or [0j]
    P2 = list(d2.p) or [0j]
    pp = _cauchy(_cauchy(P1, P2, n), ex, n)
    pp_tail = [0j] * (order + 1) + pp[order + 1:]

    def rem(z):
        lz = np.log(z)
        L1 = lz * _series_eval(d1.d, z) + _series_eval(d1.e, z)
        L2 = lz * _series_eval(d2.d, z) + _series_eval(d2.e, z)
        p1 = _series_eval(P1, z)
        p2 = _series_eval(P2, z)
        e = np.exp(-z)
        return (z ** (-Mi) * _series_eval(pp_tail, z) + e * (p1 * L2 + p2 * L1)
                + z ** Mi * e * L1 * L2)

    return PairIntegrand(f, exp0, rem)


def pair_integrand(spec: BilinearIntegrandSpec) -> PairIntegrand:
    """Build the integrand, expansion and stable remainder described by ``spec``."""
    if spec.kind is PairKind.LaguerrePair:
        m, n, alpha = spec.params
        return _laguerre_integrand(m, n, alpha, spec.order)
    t1, t2, alpha = spec.params
    return _tricomi_integrand(t1, t2, alpha, spec.order)


def numerical_fit_coefficient(f: Callable, exponent0: complex, known: list,
                              z_points=(1e-3, 1e-4), next_exponent=None) -> complex:
    """Estimate the next coefficient of ``f`` at 0 by two-point extraction.

    ``known`` are the coefficients of ``z^{exponent0+j}``, ``j < len(known)``;
    the returned value approximates the coefficient at ``j = len(known)``.
    The leading neglected term, at ``next_exponent`` (default: one power
    higher), is eliminated by combining both sample points.
    """
    k = complex(exponent0) + len(known)
    g = 1.0 if next_exponent is None else complex(next_exponent) - k
    est = []
    for z in z_points:
        r = complex(f(z))
        for j, c in enumerate(known):
            r -= c * z ** (complex(exponent0) + j)
        est.append(r / z ** k)
    w1, w2 = (z ** g for z in z_points)
    # est(z) = c + d z^g + ...: eliminate d
    return (est[1] * w1 - est[0] * w2) / (w1 - w2)
