"""Finite-part ("generalized") integration on ``(0, inf)``.

Given an integrand ``f`` with a known singular expansion ``sum_k f_k r^k`` at
zero, the generalized integral is

    sum_{k != -1} f_k s^(k+1)/(k+1) + f_{-1} ln s
        + int_0^s (f - sum_k f_k r^k) dr + int_s^inf f dr,

with split point ``s`` (1 by default, where the ``ln s`` term vanishes).
The subtracted core uses tanh-sinh quadrature and the tail an adaptive
composite Gauss-Legendre rule.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

INT_TOL = 1e-12


class GenQuadError(RuntimeError):
    """Base class for generalized-quadrature failures."""


class ExpansionIncompleteError(GenQuadError):
    """The subtracted integrand is still non-integrable at zero."""


class TailTruncationError(GenQuadError):
    """The integrand does not decay before the hard cutoff."""


@dataclass(frozen=True)
class SingularExpansion:
    """Terms ``(k, f_k)`` of ``f(r) ~ sum f_k r^k`` near 0 plus a log coefficient.

    ``log_coefficient`` is only consulted by :func:`regular_value`.
    """

    terms: tuple = ()
    log_coefficient: complex = 0j

    def __post_init__(self):
        terms = tuple((complex(k), complex(c)) for k, c in self.terms)
        ks = [k for k, _ in terms]
        for i, a in enumerate(ks):
            for b in ks[i + 1:]:
                if abs(a - b) <= INT_TOL:
                    raise ValueError(f"duplicate exponent {a}")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "log_coefficient", complex(self.log_coefficient))

    @classmethod
    def of(cls, *pairs, log_coefficient=0j) -> "SingularExpansion":
        return cls(tuple(pairs), log_coefficient)

    def coefficient(self, k) -> complex:
        for e, c in self.terms:
            if abs(e - k) <= INT_TOL:
                return c
        return 0j

    def evaluate(self, r):
        """``sum f_k r^k`` (no log term); ``r`` may be a float or ndarray."""
        out = 0j
        for k, c in self.terms:
            if c != 0:
                out = out + c * _rpow(r, k)
        return out

    def anomalous_exponents(self) -> list:
        out = []
        for k, c in self.terms:
            if c == 0 or abs(k.imag) > INT_TOL:
                continue
            n = round(k.real)
            if n <= -1 and abs(k.real - n) <= INT_TOL:
                out.append(int(n))
        return sorted(out)


def _rpow(r, k: complex):
    if isinstance(r, np.ndarray):
        if k.imag == 0.0:
            return r ** k.real
        return np.exp(k * np.log(r))
    if k.imag == 0.0:
        return r ** k.real
    return cmath.exp(k * math.log(r))


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and layout for :func:`gen_integrate`.

    ``integrand_ulps`` is the relative accuracy of ``f`` in units of machine
    epsilon; it sets where direct subtraction of the expansion becomes
    too noisy (special-function integrands are typically 10-30 ulps).
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    split: float = 1.0
    tail_cutoff: float = 200.0
    max_levels: int = 12
    core_floor: float = 1e-100
    integrand_ulps: float = 1.0

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.split <= 0 or self.tail_cutoff <= self.split:
            raise ValueError("need 0 < split < tail_cutoff")
        if self.max_levels < 3:
            raise ValueError("max_levels must be >= 3")
        if self.integrand_ulps <= 0:
            raise ValueError("integrand_ulps must be positive")


@dataclass
class GenIntegralResult:
    value: complex
    anomalous: bool
    anomalous_exponents: list
    finite_part_terms: complex
    quadrature_error_estimate: float
    notes: list = field(default_factory=list)
    converged: bool = True


def _apply(f, xs: np.ndarray, vectorized: bool) -> np.ndarray:
    if vectorized:
        return np.asarray(f(xs), dtype=complex)
    return np.array([complex(f(float(x))) for x in xs], dtype=complex)


# -- core: tanh-sinh on (0, s] ----------------------------------------------

_T_MAX = 6.5


def _ts_nodes(level: int, a: float, b: float, only_new: bool):
    """Nodes and weights of the tanh-sinh rule on ``[a, b]`` with step ``2^-level``."""
    h = 2.0 ** -level
    n = int(math.ceil(_T_MAX / h))
    j = np.arange(-n, n + 1)
    if only_new:
        j = j[j % 2 != 0]
    t = j * h
    q = np.exp(-math.pi * np.abs(np.sinh(t)))
    d = (b - a) * q / (1.0 + q)
    x = np.where(t < 0, a + d, b - d)
    w = h * (b - a) * math.pi * np.cosh(t) * q / (1.0 + q) ** 2
    keep = (x > a) & (x < b) & (w > 0)
    return x[keep], w[keep]


def _noise_floor(exp0: SingularExpansion, cfg: QuadratureConfig) -> float:
    """Smallest ``r`` where direct subtraction noise stays below ``abs_tol``."""
    floor = cfg.core_floor
    eps = np.finfo(float).eps * max(1.0, cfg.integrand_ulps)
    for k, c in exp0.terms:
        p = k.real + 1.0
        if c == 0 or p >= 0:
            continue
        r = (eps * abs(c) / (cfg.abs_tol * max(abs(p), 1e-3))) ** (1.0 / -p)
        floor = max(floor, r)
    return floor


def _check_singular(rem, exp0, floor, s, vectorized, abs_tol):
    """Raise if the remainder still behaves like ``r^beta`` with ``beta <= -1``."""
    r1 = floor * 10.0
    r2 = floor * 1e4
    if r2 >= s * 0.5:
        return
    v = _apply(rem, np.array([r1, r2]), vectorized)
    a1, a2 = abs(v[0]), abs(v[1])
    if not (np.isfinite(a1) and np.isfinite(a2)):
        raise ExpansionIncompleteError("subtracted integrand is not finite near 0")
    if a1 * r1 <= abs_tol or a2 == 0:
        return
    beta = math.log(a1 / a2) / math.log(r1 / r2)
    if beta <= -0.98:
        raise ExpansionIncompleteError(
            f"subtracted integrand behaves like r^{beta:.2f} at 0; expansion incomplete"
        )


def _core(rem, s, floor, cfg, vectorized, exp0=SingularExpansion()):
    total = 0j
    prev = None
    err = math.inf
    level = 0
    x, w = _ts_nodes(0, floor, s, only_new=False)
    total = complex(np.sum(w * _apply(rem, x, vectorized))) if x.size else 0j
    for level in range(1, cfg.max_levels + 1):
        x, w = _ts_nodes(level, floor, s, only_new=True)
        new = complex(np.sum(w * _apply(rem, x, vectorized))) if x.size else 0j
        prev, total = total, 0.5 * total + new
        err = abs(total - prev)
        if level >= 3 and err <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            break
    if floor > 0:
        total += _below_floor(rem, floor, exp0, vectorized)
    ok = err <= max(cfg.abs_tol, cfg.rel_tol * abs(total))
    return total, err, ok


def _remainder_exponents(exp0: SingularExpansion, count: int = 5, analytic: bool = True) -> list:
    """Leading exponents of ``f - exp0`` if ``f`` follows the classes of ``exp0``.

    Each class of exponents congruent mod 1 continues past its largest member;
    with ``analytic`` the integer class ``0, 1, ...`` is added.
    """
    classes = []
    for k, _ in exp0.terms:
        for idx, top in enumerate(classes):
            d = k - top
            if abs(d.imag) <= INT_TOL and abs(d.real - round(d.real)) <= INT_TOL:
                if d.real > 0:
                    classes[idx] = k
                break
        else:
            classes.append(k)
    out = [top + j for top in classes for j in range(1, count + 1)]
    # smooth factors of the integrand contribute an analytic part as well
    for j in range(count if analytic else 0):
        if all(abs(k - j) > INT_TOL for k in out) and all(abs(k - j) > INT_TOL for k, _ in exp0.terms):
            out.append(complex(j))
    return sorted(out, key=lambda k: k.real)


def _power_fit(rem, rho, vectorized):
    """``int_0^rho C r^beta`` fitted at ``rho`` and ``4 rho``; ``None`` if not integrable."""
    v = _apply(rem, np.array([rho, 4 * rho]), vectorized)
    if v[0] == 0 or v[1] == 0 or not np.all(np.isfinite(v)):
        return None
    beta = cmath.log(v[1] / v[0]) / math.log(4.0)
    if beta.real <= -0.98:
        return None
    return complex(v[0]) * rho / (beta + 1), beta


def _exponent_fit(rem, floor, kappas, vectorized):
    """Least-squares fit of ``sum B_i r^kappa_i`` on ``[floor, 4 floor]``.

    Returns the fit integrated over ``(0, floor)`` and the relative residual,
    or ``None`` when the exponents are not integrable.
    """
    if not kappas or min(k.real for k in kappas) <= -1:
        return None
    xs = floor * np.linspace(1.0, 4.0, 2 * len(kappas) + 2)
    v = _apply(rem, xs, vectorized)
    if not np.all(np.isfinite(v)):
        return None
    u = xs / floor
    A = np.array([[cmath.exp(k * math.log(x)) for k in kappas] for x in u])
    coef, *_ = np.linalg.lstsq(A, v, rcond=None)
    resid = float(np.max(np.abs(A @ coef - v))) / max(float(np.max(np.abs(v))), 1e-300)
    return complex(sum(c * floor / (k + 1) for c, k in zip(coef, kappas))), resid


_FIT_GAIN = 100.0
_FIT_USABLE = 1e-7


def _below_floor(rem, floor, exp0, vectorized) -> complex:
    """Integral of ``rem`` over ``(0, floor)``, where direct samples are too noisy.

    First choice: fit the exponents that ``exp0`` implies for the remainder,
    adding the integer class only if that shrinks the residual markedly.
    Otherwise a local power law ``C r^beta`` fitted at ``floor`` and ``2 floor``
    (error ``O(rho^(beta+2))``, removed by one Richardson step).  Last resort:
    two-point Gauss-Legendre.
    """
    plain = _exponent_fit(rem, floor, _remainder_exponents(exp0, analytic=False), vectorized)
    wide = _exponent_fit(rem, floor, _remainder_exponents(exp0, analytic=True), vectorized)
    best = plain
    if wide is not None and (plain is None or wide[1] < plain[1] / _FIT_GAIN):
        best = wide
    if best is not None and best[1] < _FIT_USABLE:
        return best[0]
    p1 = _power_fit(rem, floor, vectorized)
    p2 = _power_fit(rem, 2 * floor, vectorized)
    if p1 is None or p2 is None:
        g = floor * 0.5 * np.array([1 - 1 / math.sqrt(3), 1 + 1 / math.sqrt(3)])
        return complex(np.sum(_apply(rem, g, vectorized))) * floor * 0.5
    seg, _ = _gl(rem, floor, 2 * floor, _GL_LO, vectorized)
    i1, i2 = p1[0], p2[0] - seg
    ratio = 2.0 ** (p1[1].real + 2)
    return (ratio * i1 - i2) / (ratio - 1)


# -- tail: adaptive composite Gauss-Legendre on (s, R] ----------------------

_GL_LO = np.polynomial.legendre.leggauss(20)
_GL_HI = np.polynomial.legendre.leggauss(40)


def _gl(f, a, b, rule, vectorized):
    """Gauss-Legendre value and integral of ``|f|`` on ``[a, b]``."""
    x, w = rule
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    y = _apply(f, mid + half * x, vectorized)
    return complex(np.sum(w * y)) * half, float(np.sum(w * np.abs(y))) * half


_ROUNDOFF = 100 * np.finfo(float).eps


def _panel(f, a, b, tol, rel_tol, vectorized, depth=0):
    lo, _ = _gl(f, a, b, _GL_LO, vectorized)
    hi, l1 = _gl(f, a, b, _GL_HI, vectorized)
    err = abs(hi - lo)
    if err <= max(tol, rel_tol * abs(hi), _ROUNDOFF * l1) or depth >= 12:
        return hi, err
    m = 0.5 * (a + b)
    v1, e1 = _panel(f, a, m, tol / 2, rel_tol, vectorized, depth + 1)
    v2, e2 = _panel(f, m, b, tol / 2, rel_tol, vectorized, depth + 1)
    return v1 + v2, e1 + e2


def _tail(f, s, cfg, vectorized):
    R = cfg.tail_cutoff
    total = 0j
    err = 0.0
    a = s
    width = max(0.5, s)
    quiet = 0
    tiny = cfg.abs_tol * math.exp(-5.0)
    while a < R:
        b = min(a + width, R)
        v, e = _panel(f, a, b, cfg.abs_tol / 8, cfg.rel_tol / 8, vectorized)
        total += v
        err += e
        end = abs(_apply(f, np.array([b]), vectorized)[0])
        if abs(v) < tiny and end < tiny:
            quiet += 1
            if quiet >= 2:
                return total, err
        else:
            quiet = 0
        a = b
        width = min(width * 1.5, 8.0)
    end = abs(_apply(f, np.array([R]), vectorized)[0])
    if not np.isfinite(end) or end * R > cfg.abs_tol:
        raise TailTruncationError(f"integrand still {end:.3g} at the cutoff {R}")
    return total, err


# -- public API -------------------------------------------------------------

def gen_integrate(
    f: Callable,
    exp0: SingularExpansion,
    cfg: Optional[QuadratureConfig] = None,
    *,
    remainder: Optional[Callable] = None,
    vectorized: bool = False,
) -> GenIntegralResult:
    """Generalized integral of ``f`` over ``(0, inf)``.

    Parameters
    ----------
    f : callable
        Integrand; must decay on the tail.
    exp0 : SingularExpansion
        Every term with ``Re k <= -1`` the integrand possesses; further
        terms are optional.
    cfg : QuadratureConfig, optional
    remainder : callable, optional
        ``f(r) - exp0.evaluate(r)`` computed without cancellation.  Without
        it the subtraction is done directly and the core integration is
        truncated where the rounding noise of the subtraction would exceed
        ``abs_tol``.
    vectorized : bool
        Whether ``f`` and ``remainder`` accept ndarrays.

    Returns
    -------
    GenIntegralResult

    Raises
    ------
    ExpansionIncompleteError
        The subtracted integrand is still non-integrable at 0.
    TailTruncationError
        ``f`` has not decayed at ``cfg.tail_cutoff``.
    """
    cfg = cfg or QuadratureConfig()
    s = float(cfg.split)
    notes = []

    fp = 0j
    for k, c in exp0.terms:
        if c == 0:
            continue
        if abs(k + 1) <= INT_TOL:
            fp += c * math.log(s)
        else:
            fp += c * _rpow(s, k + 1) / (k + 1)

    if remainder is None:
        if exp0.terms:
            def rem(r, _f=f):
                return _f(r) - exp0.evaluate(r)
        else:
            rem = f
        floor = _noise_floor(exp0, cfg)
    else:
        rem = remainder
        floor = cfg.core_floor
    if floor > cfg.core_floor:
        notes.append(f"core truncated at r={floor:.3g} to limit subtraction noise")

    _check_singular(rem, exp0, floor, s, vectorized, cfg.abs_tol)
    core, core_err, ok = _core(rem, s, floor, cfg, vectorized, exp0)
    if not ok:
        notes.append("core quadrature did not reach the requested tolerance")
    tail, tail_err = _tail(f, s, cfg, vectorized)

    anomalous = exp0.anomalous_exponents()
    if exp0.coefficient(-1) != 0:
        notes.append("nonzero r^-1 coefficient: value depends on the length scale (unit scale used)")

    return GenIntegralResult(
        value=fp + core + tail,
        anomalous=bool(anomalous),
        anomalous_exponents=anomalous,
        finite_part_terms=fp,
        quadrature_error_estimate=float(core_err + tail_err),
        notes=notes,
        converged=ok,
    )


def _richardson(vals: Sequence[complex], ratio: float = 2.0):
    """Polynomial (in ``r``) extrapolation of a halving sequence to 0.

    Returns the best diagonal entry and the difference to its predecessor.
    """
    table = [list(vals)]
    for j in range(1, len(vals)):
        f = ratio ** j
        prev = table[-1]
        table.append([(f * prev[i + 1] - prev[i]) / (f - 1) for i in range(len(prev) - 1)])
    best, best_err = table[0][-1], abs(table[0][-1] - table[0][-2])
    for j in range(1, len(table)):
        row = table[j]
        if len(row) < 2:
            break
        e = abs(row[-1] - row[-2])
        if e < best_err:
            best, best_err = row[-1], e
    return best, best_err


def regular_value(F: Callable, exp0: SingularExpansion, *, return_error: bool = False,
                  tol: float = 1e-6):
    """Regular value ``rv_0 F``: the limit at 0 of ``F - sum_{k != 0} F_k r^k - c ln r``.

    The ``k = 0`` term of ``exp0`` is ignored.  Samples ``r = 2^-j / 4`` for
    ``j = 0..8`` and extrapolates.

    Raises
    ------
    GenQuadError
        The extrapolation does not settle (expansion probably wrong).
    """
    c = exp0.log_coefficient
    rs = [0.25 * 2.0 ** -j for j in range(9)]
    vals = []
    for r in rs:
        v = complex(F(r)) - c * math.log(r)
        for k, fk in exp0.terms:
            if abs(k) > INT_TOL and fk != 0:
                v -= fk * _rpow(r, k)
        vals.append(v)
    val, err = _richardson(vals)
    if not np.isfinite(abs(val)) or err > tol * max(1.0, abs(val)):
        raise GenQuadError(f"regular value did not converge (spread {err:.3g})")
    return (val, err) if return_error else val


def integrate_by_parts_check(f, df, g, dg, exp_f_dg, exp_df_g, exp_fg, cfg=None):
    """Both sides of ``gen_int f g' = -gen_int f' g - rv_0(f g)``.

    Returns
    -------
    (lhs, rhs) : tuple of complex
    """
    lhs = gen_integrate(lambda r: f(r) * dg(r), exp_f_dg, cfg).value
    rhs = -gen_integrate(lambda r: df(r) * g(r), exp_df_g, cfg).value
    rhs -= regular_value(lambda r: f(r) * g(r), exp_fg)
    return lhs, rhs
