"""Kummer's 1F1, Olver's normalized bold-F and Tricomi's U in Lie-algebraic parameters.

``theta`` and ``alpha`` relate to the classical parameters by

    a = (1 + alpha + theta)/2,   b = (1 - alpha + theta)/2,   c = 1 + alpha.

Tricomi's U for real ``z > 0`` is evaluated by one of four routes:

* a terminating 2F0 sum when ``a`` or ``b`` is a non-positive integer
  (the Laguerre case);
* for ``z <= Z_CONN`` the connection formula, or the logarithmic series when
  ``alpha`` lies within ``SWITCH_EPS`` of an integer;
* for large ``z`` the optimally truncated asymptotic 2F0 series;
* in between, Taylor-series continuation of the confluent ODE inward from
  the asymptotic region.  Continuing inward is stable because U is the
  dominant solution in that direction.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from genint.scalar import PoleError, digamma, pochhammer, rgamma

SWITCH_EPS = 1e-8
Z_ASYM = 40.0
Z_CONN = 2.0
SERIES_TOL = 1e-17
SERIES_CAP = 10_000
INT_TOL = 1e-12


@dataclass(frozen=True)
class LieParams:
    """Lie-algebraic parameter pair ``(theta, alpha)``."""

    theta: complex
    alpha: complex

    def __post_init__(self):
        object.__setattr__(self, "theta", complex(self.theta))
        object.__setattr__(self, "alpha", complex(self.alpha))

    @property
    def a(self) -> complex:
        return (1 + self.alpha + self.theta) / 2

    @property
    def b(self) -> complex:
        return (1 - self.alpha + self.theta) / 2

    @property
    def c(self) -> complex:
        return 1 + self.alpha

    @classmethod
    def from_classical(cls, a, c) -> "LieParams":
        a, c = complex(a), complex(c)
        return cls(theta=2 * a - c, alpha=c - 1)

    def reflected(self) -> "LieParams":
        """Parameters ``(theta, -alpha)``."""
        return LieParams(self.theta, -self.alpha)


def _nonpos_int(x: complex, tol: float = INT_TOL):
    """Return N if ``x`` is (numerically) ``-N`` with N >= 0."""
    if abs(x.imag) > tol or x.real > tol:
        return None
    n = round(-x.real)
    if abs(x.real + n) <= tol * max(1.0, abs(x.real)):
        return int(n)
    return None


def _nearest_int(x: complex) -> tuple[int, float]:
    m = round(x.real)
    return int(m), abs(x - m)


# -- power series -----------------------------------------------------------

def _bF_terms_start(a: complex, c: complex):
    """First index with nonzero 1/Gamma(c+n), and the coefficient there."""
    n0 = 0
    k = _nonpos_int(c)
    if k is not None:
        n0 = k + 1
    coef = pochhammer(a, n0) * rgamma(c + n0) / math.factorial(n0)
    return n0, coef


def _series_sum(a: complex, c: complex, z, normalized: bool, nderiv: int = 0):
    """Sum ``sum_n (a)_n z^n / (g(c, n) n!)`` and up to two derivatives.

    ``g(c, n)`` is ``Gamma(c+n)`` for the normalized function, ``(c)_n`` otherwise.
    Returns ``(values, max_abs_term)`` where ``values`` has ``nderiv+1`` entries.
    """
    z = complex(z)
    if normalized:
        n, coef = _bF_terms_start(a, c)
    else:
        if _nonpos_int(c) is not None:
            raise PoleError(f"1F1 undefined for c = {c}")
        n, coef = 0, 1.0 + 0j
    sums = [0j] * (nderiv + 1)
    biggest = 0.0
    small = 0
    while n < SERIES_CAP:
        if coef == 0:
            small += 1
        else:
            zn = z ** n if n else 1.0 + 0j
            term = coef * zn
            sums[0] += term
            biggest = max(biggest, abs(term))
            if nderiv >= 1 and n >= 1:
                sums[1] += n * coef * z ** (n - 1)
            if nderiv >= 2 and n >= 2:
                sums[2] += n * (n - 1) * coef * z ** (n - 2)
            if abs(term) <= SERIES_TOL * max(abs(sums[0]), 1e-300):
                small += 1
            else:
                small = 0
        if small >= 3 and n > abs(z):
            break
        coef = coef * (a + n) / ((c + n) * (n + 1))
        n += 1
    return sums, biggest


def kummer_F(p: LieParams, z: float) -> complex:
    """Kummer's ``F_{theta,alpha}(z) = 1F1(a; 1+alpha; z)``.

    Uses the direct series, or the first Kummer identity
    ``e^z 1F1(c-a; c; -z)`` when that sums with less cancellation.
    """
    a, c = p.a, p.c
    if _nonpos_int(c) is not None:
        raise PoleError(f"F_{{theta,alpha}} has a pole at 1+alpha = {c}")
    (val,), big = _series_sum(a, c, z, normalized=False)
    if big > 1e4 * abs(val):
        (alt,), big2 = _series_sum(c - a, c, -z, normalized=False)
        ez = cmath.exp(z)
        if big2 < big * 1e-2 or big2 <= 1e4 * abs(alt):
            return ez * alt
    return val


def kummer_F_derivatives(p: LieParams, z: float) -> tuple[complex, complex, complex]:
    """``F, F', F''`` by term-wise differentiation of the series."""
    if _nonpos_int(p.c) is not None:
        raise PoleError("pole in c")
    sums, _ = _series_sum(p.a, p.c, z, normalized=False, nderiv=2)
    return tuple(sums)


def olver_bF(p: LieParams, z: float) -> complex:
    """Olver's normalized ``bold-F_{theta,alpha}(z) = 1F1(a;c;z)/Gamma(c)``; entire in alpha."""
    (val,), _ = _series_sum(p.a, p.c, z, normalized=True)
    return val


def _bF_derivs(a, c, z):
    sums, _ = _series_sum(a, c, z, normalized=True, nderiv=2)
    return sums


def bF_coefficients(a, c, n_terms: int) -> list[complex]:
    """Taylor coefficients of ``1F1(a;c;z)/Gamma(c)``."""
    a, c = complex(a), complex(c)
    out = []
    for n in range(n_terms):
        out.append(pochhammer(a, n) * rgamma(c + n) / math.factorial(n))
    return out


# -- asymptotic 2F0 ---------------------------------------------------------

def asymptotic_2F0(a, b, w: float, max_terms: int = 200) -> tuple[complex, float]:
    """Optimally truncated asymptotic sum of ``2F0(a, b; -; w)`` for ``w < 0``.

    Returns
    -------
    value : complex
    err : float
        Magnitude of the first omitted term.
    """
    if w >= 0:
        raise ValueError("asymptotic_2F0 requires w < 0")
    a, b = complex(a), complex(b)
    term = 1.0 + 0j
    total = 0j
    prev = math.inf
    for n in range(max_terms):
        if abs(term) > prev:
            if n == 1:
                warnings.warn("2F0 asymptotic series diverges from the first term", RuntimeWarning)
            return total, abs(term)
        total += term
        prev = abs(term)
        nxt = term * (a + n) * (b + n) * w / (n + 1)
        if nxt == 0:
            return total, 0.0
        if abs(nxt) <= SERIES_TOL * abs(total):
            return total + nxt, abs(nxt)
        term = nxt
    return total, abs(term)


def _tricomi_asymptotic(a: complex, b: complex, z: float):
    """``U`` and ``U'`` from the asymptotic series, with relative error estimate."""
    term = 1.0 + 0j
    s0 = 0j
    s1 = 0j
    prev = math.inf
    err = math.inf
    for n in range(400):
        mag = abs(term)
        if mag > prev:
            err = mag
            break
        s0 += term
        s1 += term * (-a - n)
        prev = mag
        term = term * (a + n) * (b + n) * (-1.0 / z) / (n + 1)
        if term == 0:
            err = 0.0
            break
        if abs(term) <= SERIES_TOL * abs(s0):
            s0 += term
            s1 += term * (-a - n - 1)
            err = abs(term)
            break
    za = z ** (-a)
    scale = abs(s0) if s0 != 0 else 1.0
    return za * s0, za * s1 / z, err / scale


def _terminating(a: complex, b: complex):
    na = _nonpos_int(a)
    nb = _nonpos_int(b)
    if na is None and nb is None:
        return None
    cands = [n for n in (na, nb) if n is not None]
    return min(cands)


def _tricomi_terminating(a: complex, b: complex, N: int, z):
    """Exact finite sum ``z^{-a} sum_{k<=N} (a)_k (b)_k (-1/z)^k / k!``."""
    z = np.asarray(z, dtype=complex)
    total = np.zeros_like(z)
    term = 1.0 + 0j
    for k in range(N + 1):
        total = total + term * (-1.0 / z) ** k
        term = term * (a + k) * (b + k) / (k + 1)
    return z ** (-a) * total


def terminating_terms(p: LieParams):
    """For polynomial-type U return ``[(exponent, coeff), ...]``, else None."""
    a, b = p.a, p.b
    N = _terminating(a, b)
    if N is None:
        return None
    out = []
    term = 1.0 + 0j
    for k in range(N + 1):
        out.append((-a - k, term * (-1) ** k))
        term = term * (a + k) * (b + k) / (k + 1)
    return out


# -- connection formula -----------------------------------------------------

def tricomi_U_connection(p: LieParams, z: float) -> complex:
    """U from the connection formula; loses accuracy near integer alpha and at large z."""
    return tricomi_U_connection_derivatives(p, z)[0]


def tricomi_U_connection_derivatives(p: LieParams, z: float):
    alpha = p.alpha
    s = cmath.sin(math.pi * alpha)
    if abs(s) == 0:
        raise PoleError("connection formula needs non-integer alpha")
    K = math.pi / s
    z = complex(z)
    A = _bF_derivs(p.a, 1 + alpha, z)
    B = _bF_derivs(p.b, 1 - alpha, z)
    ra = rgamma(p.a)
    rb = rgamma(p.b)
    zp = z ** (-alpha)
    u0 = K * (-rb * A[0] + ra * zp * B[0])
    u1 = K * (-rb * A[1] + ra * (-alpha * zp / z * B[0] + zp * B[1]))
    u2 = K * (
        -rb * A[2]
        + ra * (alpha * (alpha + 1) * zp / z ** 2 * B[0] - 2 * alpha * zp / z * B[1] + zp * B[2])
    )
    return u0, u1, u2


# -- degenerate (integer alpha) series --------------------------------------

@dataclass(frozen=True)
class DegenerateParts:
    """``U_{theta,m}(z) = z^{-m} P(z) + ln(z) D(z) + E(z)`` for ``m >= 0``.

    ``P`` is a polynomial (ascending coefficients); ``D`` and ``E`` are power
    series truncated at ``len(d)`` terms.
    """

    m: int
    p: tuple
    d: tuple
    e: tuple


def degenerate_parts(theta, m: int, terms: int = 60) -> DegenerateParts:
    """Coefficients of the logarithmic representation of ``U_{theta,m}``, ``m >= 0``."""
    if m < 0:
        raise ValueError("degenerate_parts expects m >= 0")
    params = LieParams(theta, m)
    a, b = params.a, params.b
    term_list = terminating_terms(params)
    if term_list is not None:
        # polynomial in z and 1/z: negative powers go to P, the rest to E
        P = [0j] * max(m, 1)
        E = [0j] * max(terms, 1)
        for expo, coef in term_list:
            k = round(expo.real)
            if k < 0:
                P[k + m] += coef
            else:
                if k >= len(E):
                    E.extend([0j] * (k + 1 - len(E)))
                E[k] += coef
        return DegenerateParts(m, tuple(P[:m]), tuple([0j] * len(E)), tuple(E))
    ra = rgamma(a)
    P = [0j] * m
    for k in range(1, m + 1):
        P[m - k] = ra * math.factorial(k - 1) * pochhammer(1 - a + k, m - k) / math.factorial(m - k)
    pref = (-1) ** (m + 1) * rgamma(b) / math.factorial(m)
    D = []
    E = []
    coef = pref
    for j in range(terms):
        D.append(coef)
        E.append(coef * (digamma(a + j) - digamma(1 + j) - digamma(m + j + 1)))
        coef = coef * (a + j) / ((m + 1 + j) * (j + 1))
    return DegenerateParts(m, tuple(P), tuple(D), tuple(E))


def tricomi_U_degenerate(theta, m: int, z: float, terms: int | None = None) -> tuple[complex, float]:
    """Tricomi U at integer ``alpha = m`` from the logarithmic series.

    Negative ``m`` uses ``U_{theta,m} = z^{-m} U_{theta,-m}``.  Polynomial
    cases (``a`` or ``b`` a non-positive integer) are summed exactly.

    Returns
    -------
    value : complex
    err : float
        Bound on the truncation error of the log series.
    """
    if z <= 0:
        raise ValueError("z must be positive")
    if m < 0:
        val, err = tricomi_U_degenerate(theta, -m, z, terms)
        f = z ** (-m)
        return val * f, err * f
    params = LieParams(theta, m)
    N = _terminating(params.a, params.b)
    if N is not None:
        return complex(_tricomi_terminating(params.a, params.b, N, z)), 0.0
    n_terms = terms if terms is not None else 400
    parts = degenerate_parts(theta, m, terms=n_terms)
    z = complex(z)
    lz = cmath.log(z)
    head = sum(c * z ** i for i, c in enumerate(parts.p)) * z ** (-m) if m else 0j
    tail = 0j
    zj = 1.0 + 0j
    small = 0
    last = 0.0
    for j, (dj, ej) in enumerate(zip(parts.d, parts.e)):
        t = (dj * lz + ej) * zj
        tail += t
        zj *= z
        last = abs(t)
        if terms is None and j > 2 * abs(z):
            if last <= SERIES_TOL * max(abs(tail), abs(head), 1e-300):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
    # the tail ratio is below z/(j+1) <= 1/2 once j > 2z, so twice the last term bounds it
    return head + tail, 2.0 * last


# -- ODE continuation -------------------------------------------------------

def _ode_step(a: complex, c: complex, z0: float, f: complex, df: complex, h: float):
    """Advance ``z f'' + (c - z) f' - a f = 0`` from ``z0`` to ``z0 + h`` by Taylor series."""
    t0, t1 = f, df
    val = t0 + t1 * h
    der = t1
    hk = h  # h^k for the current t_k with k = 1
    small = 0
    k = 0
    while k < 400:
        t2 = ((k + a) * t0 - (k + 1) * (k + c - z0) * t1) / (z0 * (k + 2) * (k + 1))
        hk_next = hk * h  # h^(k+2)
        term = t2 * hk_next
        val += term
        der += (k + 2) * t2 * hk
        if abs(term) <= SERIES_TOL * abs(val):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        t0, t1 = t1, t2
        hk = hk_next
        k += 1
    return val, der


def _asym_start(a: complex, b: complex, z_min: float):
    z0 = max(Z_ASYM, z_min)
    while True:
        u, du, rel = _tricomi_asymptotic(a, b, z0)
        if rel <= 1e-15 or z0 > 5000:
            return z0, u, du
        z0 *= 1.5


def _small_z(p: LieParams, z: float) -> complex:
    m, dist = _nearest_int(p.alpha)
    if dist <= SWITCH_EPS:
        return tricomi_U_degenerate(p.theta, m, z)[0]
    return tricomi_U_connection(p, z)


def tricomi_U_array(p: LieParams, zs) -> np.ndarray:
    """Vector version of :func:`tricomi_U`; one ODE sweep serves all mid-range nodes."""
    zs = np.asarray(zs, dtype=float)
    if np.any(zs <= 0):
        raise ValueError("tricomi_U requires z > 0")
    a, b, c = p.a, p.b, p.c
    N = _terminating(a, b)
    if N is not None:
        return _tricomi_terminating(a, b, N, zs)
    out = np.empty(zs.shape, dtype=complex)
    flat = zs.ravel()
    res = out.ravel()
    small_idx = np.nonzero(flat <= Z_CONN)[0]
    for i in small_idx:
        res[i] = _small_z(p, float(flat[i]))
    rest = np.nonzero(flat > Z_CONN)[0]
    if rest.size:
        z0, u, du = _asym_start(a, b, 0.0)
        order = rest[np.argsort(-flat[rest])]
        for i in order:
            target = float(flat[i])
            if target >= z0:
                res[i] = _tricomi_asymptotic(a, b, target)[0]
                continue
            while z0 > target:
                h = max(-0.5 * z0, target - z0)
                u, du = _ode_step(a, c, z0, u, du, h)
                z0 = z0 + h
                if abs(z0 - target) < 1e-14 * target:
                    z0 = target
            res[i] = u
    return out


def tricomi_U(p: LieParams, z: float) -> complex:
    """Tricomi's confluent function ``U_{theta,alpha}(z)`` for real ``z > 0``."""
    if z <= 0:
        raise ValueError("tricomi_U requires z > 0")
    a, b = p.a, p.b
    N = _terminating(a, b)
    if N is not None:
        return complex(_tricomi_terminating(a, b, N, z))
    if z <= Z_CONN:
        return _small_z(p, z)
    return complex(tricomi_U_array(p, [z])[0])
