"""Verification suites: closed forms against independent oracles.

Each suite is a list of :class:`Case` objects.  A case compares one
``closed_form`` value with one or more oracle values; it passes when every
oracle lies within ``tol * max(1, |closed_form|)`` (or matches exactly for
rational identities).
"""

from __future__ import annotations

import cmath
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from genint import closed_forms as cf
from genint import confluent as cfl
from genint import dimreg as dr
from genint import expansions as ex
from genint import genquad as gq
from genint import laguerre as lg
from genint import scalar as sc

SUITES = ("identities", "confluent", "tricomi-bilinear", "laguerre-gram", "dimreg")


@dataclass
class Case:
    id: str
    regime: str
    closed_form: Callable
    oracles: dict
    tol: float
    exact: bool = False


@dataclass
class VerificationReport:
    id: str
    regime: str
    closed_form: complex
    oracle: dict
    abs_err: float
    rel_err: float
    tol: float
    passed: bool
    seconds: Optional[float] = None
    error: Optional[str] = None


@dataclass
class VerifyConfig:
    quad: gq.QuadratureConfig = field(default_factory=gq.QuadratureConfig)
    tol_scale: float = 1.0
    workers: Optional[int] = None


def run_case(case: Case, cfg: VerifyConfig) -> VerificationReport:
    t0 = time.perf_counter()
    tol = case.tol * cfg.tol_scale
    try:
        closed = case.closed_form()
        oracle = {k: case.oracles[k]() for k in sorted(case.oracles)}
        if case.exact:
            diffs = [abs(Fraction(closed) - Fraction(v)) if _rational(closed, v)
                     else abs(complex(closed) - complex(v)) for v in oracle.values()]
            abs_err = float(max(diffs))
            ok = abs_err == 0
        else:
            abs_err = max(abs(complex(closed) - complex(v)) for v in oracle.values())
            ok = abs_err <= tol * max(1.0, abs(complex(closed)))
        mag = abs(complex(closed))
        rel_err = abs_err / mag if mag > 0 else abs_err
        rep = VerificationReport(case.id, case.regime, complex(closed),
                                 {k: complex(v) for k, v in oracle.items()},
                                 float(abs_err), float(rel_err), tol, bool(ok))
    except Exception as exc:  # a crashing case is a failing case
        rep = VerificationReport(case.id, case.regime, complex("nan"), {}, math.inf, math.inf,
                                 tol, False, error=f"{type(exc).__name__}: {exc}")
    rep.seconds = time.perf_counter() - t0
    return rep


def _rational(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def run_suites(names, cfg: Optional[VerifyConfig] = None) -> list:
    """Run the named suites and return reports sorted by case id."""
    cfg = cfg or VerifyConfig()
    cases = []
    for name in names:
        cases.extend(SUITE_BUILDERS[name](cfg))
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate case ids")
    workers = cfg.workers
    if workers is None:
        cap = os.environ.get("GENINT_THREADS")
        workers = int(cap) if cap else min(4, os.cpu_count() or 1)
    workers = max(1, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda c: run_case(c, cfg), cases))
    return sorted(reports, key=lambda r: r.id)


# -- independent oracles used by the suites ---------------------------------

def bessel_k0_series(r: float) -> float:
    """``K_0(r) = -(ln(r/2) + gamma) I_0(r) + sum (r^2/4)^k/(k!)^2 H_k``."""
    q = r * r / 4
    i0 = []
    tail = []
    term = 1.0
    h = 0.0
    for k in range(200):
        if k:
            term *= q / (k * k)
            h += 1.0 / k
        i0.append(term)
        tail.append(term * h)
        if k > 5 and term < 1e-18 * (1 + sum(i0)):
            break
    return -(math.log(r / 2) + sc.EULER_GAMMA) * math.fsum(i0) + math.fsum(tail)


def expint_e1(z: float) -> float:
    """``E_1(z)`` for ``z >= 1`` from its continued fraction (modified Lentz)."""
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * i
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-z)


def _sym_limit(f, eps):
    """Two-sided average ``(f(eps) + f(-eps))/2`` with one Richardson step."""
    s1 = 0.5 * (f(eps) + f(-eps))
    s2 = 0.5 * (f(eps / 2) + f(-eps / 2))
    return (4 * s2 - s1) / 3


def _pole_limit_oracle(n: int):
    def r1(e):
        z = -n + e
        return sc.trigamma(z) / sc.gamma(z) ** 2

    def r2(e):
        z = -n + e
        return (sc.trigamma(z) - sc.digamma(z) ** 2) / sc.gamma(z)

    return _sym_limit(r1, 1e-6), _sym_limit(r2, 1e-6)


def _plain_quad(f, cfg):
    return gq.gen_integrate(f, gq.SingularExpansion(), cfg, vectorized=True).value


# -- suites -----------------------------------------------------------------

def _identities(cfg: VerifyConfig) -> list:
    cases = []
    tol = 1e-10
    for z in (0.3, 0.5, 1.7, -2.25, 3.6, 0.5 + 0.5j, -1.3 + 2j, 7.5 - 1j):
        def closed(z=z):
            zz = complex(z)
            return sc.gamma(1 + zz) * sc.gamma(1 - zz) * cmath.sin(math.pi * zz) / (math.pi * zz)
        cases.append(Case(f"identities/reflection/z={z}", "scalar", closed, {"one": lambda: 1.0}, 1e-12))
    for a in (Fraction(1, 2), Fraction(1), Fraction(5, 3), Fraction(7)):
        for n in (0, 1, 7, 30):
            cases.append(Case(
                f"identities/pochhammer-sum/a={a}/n={n:02d}", "exact",
                lambda a=a, n=n: sum(Fraction(sc.pochhammer(a, k), math.factorial(k)) for k in range(n + 1)),
                {"telescoped": lambda a=a, n=n: Fraction(sc.pochhammer(a + 1, n), math.factorial(n))},
                0.0, exact=True))
    for m in range(1, 26):
        def tele_lhs(m=m):
            return [sum(Fraction(math.factorial(m - k), math.factorial(n + 1 - k))
                        for k in range(1, n + 2)) for n in range(m)]

        def tele_rhs(m=m):
            return [Fraction(math.factorial(m), math.factorial(n) * (m - n)) for n in range(m)]

        cases.append(Case(f"identities/factorial-telescoping/m={m:02d}", "exact",
                          lambda m=m: sum(abs(x - y) for x, y in zip(tele_lhs(m), tele_rhs(m))),
                          {"zero": lambda: Fraction(0)}, 0.0, exact=True))
    for z in (0.3, 1.7, -2.5 + 0.5j):
        for m in (1, 4, 12):
            cases.append(Case(
                f"identities/harmonic-induction/z={z}/m={m:02d}", "scalar",
                lambda z=z, m=m: sum(sc.harmonic(z, k) / (z + k) for k in range(m)),
                {"closed": lambda z=z, m=m: 0.5 * (sc.harmonic_derivative(z, m) + sc.harmonic(z, m) ** 2)},
                tol))
    for n in range(6):
        vals = sc.lemma_b2_values(n)
        for i in range(2):
            cases.append(Case(f"identities/pole-limits/n={n}/part={i + 1}", "scalar",
                              lambda v=vals[i]: v,
                              {"eps-limit": lambda n=n, i=i: _pole_limit_oracle(n)[i]}, 1e-5))
    for alpha in (0.3, -0.3, 1.6, -1.6):
        for theta in (0.0, 1.2, -2.5):
            for z in (0.5, 1.0, 4.0):
                p = cfl.LieParams(theta, alpha)
                cases.append(Case(
                    f"identities/u-reflection/t={theta}/a={alpha}/z={z}", "confluent",
                    lambda p=p, z=z: cfl.tricomi_U(p, z),
                    {"reflected": lambda p=p, z=z: z ** (-p.alpha) * cfl.tricomi_U(p.reflected(), z)},
                    1e-9))
                q = cfl.LieParams(-theta, alpha)
                cases.append(Case(
                    f"identities/kummer-identity/t={theta}/a={alpha}/z={z}", "confluent",
                    lambda p=p, z=z: cfl.kummer_F(p, z) / math.exp(z),
                    {"transformed": lambda q=q, z=z: cfl.kummer_F(q, -z)}, tol))
    for r in (0.5, 1.0, 3.0):
        cases.append(Case(
            f"identities/bessel-half/r={r}", "confluent",
            lambda r=r: math.sqrt(math.pi * 2 * r) * math.exp(-r) * cfl.tricomi_U(cfl.LieParams(0, 1), 2 * r),
            {"K_half": lambda r=r: math.sqrt(math.pi / (2 * r)) * math.exp(-r)}, tol))
    # Laguerre identities
    for n, a in ((1, 0), (3, Fraction(1, 2)), (4, -2), (5, Fraction(-7, 3))):
        cases.append(Case(f"identities/rodrigues/n={n}/a={a}", "exact",
                          lambda n=n, a=a: int(lg.rodrigues_check(n, a, Fraction(3, 7))),
                          {"true": lambda: 1}, 0.0, exact=True))
    for n, k, z in ((1, 1, Fraction(2)), (3, 2, Fraction(13, 10)), (2, 2, Fraction(0)), (5, 3, Fraction(7, 4))):
        pair = lg.special_alpha_identity(n, k, z)
        cases.append(Case(f"identities/special-alpha/n={n}/a={k}/z={z}", "exact",
                          lambda pair=pair: pair[0], {"rhs": lambda pair=pair: pair[1]}, 0.0, exact=True))
    for kind in (1, 2):
        for a in (Fraction(3, 2), -2):
            for z in (Fraction(7, 10), 3):
                lhs = lg.generating_function_coefficients(kind, a, z, 12)
                rhs = lg.generating_function_sums(kind, a, z, 12)
                cases.append(Case(f"identities/generating-{kind}/a={a}/z={z}", "exact",
                                  lambda lhs=lhs, rhs=rhs: sum(abs(x - y) for x, y in zip(lhs, rhs)),
                                  {"zero": lambda: Fraction(0)}, 0.0, exact=True))
    # generalized-integral engine unit values
    q = cfg.quad
    cases.append(Case("identities/genquad/z^-1", "anomalous", lambda: -sc.EULER_GAMMA,
                      {"genquad": lambda: gq.gen_integrate(lambda z: math.exp(-z) / z,
                                                           gq.SingularExpansion.of((-1, 1)), q).value},
                      1e-9))
    cases.append(Case("identities/genquad/z^-1/2", "generalized", lambda: math.sqrt(math.pi),
                      {"genquad": lambda: gq.gen_integrate(lambda z: math.exp(-z) / math.sqrt(z),
                                                           gq.SingularExpansion.of((-0.5, 1)), q).value},
                      1e-9))
    for name, parts in _ibp_cases().items():
        cases.append(Case(f"identities/genquad/parts/{name}", "generalized",
                          lambda parts=parts: gq.integrate_by_parts_check(*parts, q)[0],
                          {"rhs": lambda parts=parts: gq.integrate_by_parts_check(*parts, q)[1]},
                          1e-8))
    return cases


def _ibp_cases() -> dict:
    E = gq.SingularExpansion
    exp = math.exp
    return {
        "exp-times-z": (lambda z: exp(-z), lambda z: -exp(-z), lambda z: z, lambda z: 1.0,
                        E(), E(), E()),
        "inverse-times-exp": (lambda z: 1 / z, lambda z: -1 / z ** 2, lambda z: exp(-z), lambda z: -exp(-z),
                              E.of((-1, -1)), E.of((-2, -1), (-1, 1)), E.of((-1, 1))),
        "power-times-exp": (lambda z: z ** 0.3, lambda z: 0.3 * z ** -0.7, lambda z: exp(-z),
                            lambda z: -exp(-z), E(), E(), E.of((0.3, 1), (1.3, -1), (2.3, 0.5))),
    }


def _confluent(cfg: VerifyConfig) -> list:
    cases = []
    P = cfl.LieParams
    add = cases.append
    add(Case("confluent/kummer/a=c", "series", lambda: cfl.kummer_F(P(1.3, 0.3), 2.0),
             {"exp": lambda: math.exp(2.0)}, 1e-12))
    add(Case("confluent/kummer/z=0", "series", lambda: cfl.kummer_F(P(0.7, -0.4), 0.0),
             {"one": lambda: 1.0}, 1e-15))
    add(Case("confluent/kummer/1F1(1;2;1)", "series", lambda: cfl.kummer_F(P(0, 1), 1.0),
             {"closed": lambda: math.e - 1}, 1e-12))
    add(Case("confluent/olver/a=0", "series", lambda: cfl.olver_bF(P(-1, 0), 3.7),
             {"one": lambda: 1.0}, 1e-15))
    add(Case("confluent/olver/normalization", "series", lambda: cfl.olver_bF(P(0, 0.3), 1.0),
             {"kummer/Gamma": lambda: cfl.kummer_F(P(0, 0.3), 1.0) / sc.gamma(1.3)}, 1e-12))

    def olver_exact():
        total = Fraction(0)
        for n in range(1, 200):
            total += sc.pochhammer(Fraction(1, 2), n) / (math.factorial(n - 1) * math.factorial(n))
        return float(total)

    add(Case("confluent/olver/c=0", "series", lambda: cfl.olver_bF(P(1, -1), 1.0),
             {"rational-series": olver_exact}, 1e-12))
    add(Case("confluent/tricomi/a=0", "terminating", lambda: cfl.tricomi_U(P(-1.7, 0.7), 3.0),
             {"one": lambda: 1.0}, 1e-14))
    add(Case("confluent/tricomi/U01", "terminating", lambda: cfl.tricomi_U(P(0, 1), 2.0),
             {"1/z": lambda: 0.5, "log-series": lambda: cfl.tricomi_U_degenerate(0, 1, 2.0)[0]}, 1e-12))
    for n in range(5):
        for alpha in (0.4, -0.7, 2.0):
            for z in (0.5, 2.0, 10.0):
                th = -1 - alpha - 2 * n
                add(Case(f"confluent/tricomi-laguerre/n={n}/a={alpha}/z={z}", "terminating",
                         lambda n=n, alpha=alpha, z=z: lg.laguerre_eval(lg.laguerre_build(n, alpha), z),
                         {"tricomi": lambda th=th, n=n, alpha=alpha, z=z:
                          (-1) ** n / math.factorial(n) * cfl.tricomi_U(P(th, alpha), z)}, 1e-9))
    for m in (0, 1, 2):
        for theta in (1.2, 2.0):
            for z in (0.5, 1.5):
                def conn(e, m=m, theta=theta, z=z):
                    return cfl.tricomi_U_connection(P(theta, m + e), z)
                add(Case(f"confluent/degenerate-limit/m={m}/t={theta}/z={z}", "degenerate",
                         lambda m=m, theta=theta, z=z: cfl.tricomi_U_degenerate(theta, m, z)[0],
                         {"connection-limit": lambda conn=conn: _sym_limit(conn, 1e-5)}, 1e-6))
    for m in (1, 2):
        for theta in (0.3, 1.2):
            add(Case(f"confluent/degenerate-reflection/m={m}/t={theta}", "degenerate",
                     lambda m=m, theta=theta: 4.0 ** -m * cfl.tricomi_U_degenerate(theta, -m, 4.0)[0],
                     {"ode-continuation": lambda m=m, theta=theta: cfl.tricomi_U(P(theta, m), 4.0)}, 1e-9))
    add(Case("confluent/2F0/a=0", "asymptotic", lambda: cfl.asymptotic_2F0(0, 2.5, -0.1)[0],
             {"one": lambda: 1.0}, 0.0))
    add(Case("confluent/2F0/U(1,1,100)", "asymptotic", lambda: cfl.asymptotic_2F0(1, 1, -0.01)[0],
             {"E1-continued-fraction": lambda: 100 * math.exp(100) * expint_e1(100.0)}, 1e-7))
    add(Case("confluent/2F0/K0(10)", "asymptotic", lambda: cfl.asymptotic_2F0(0.5, 0.5, -1 / 20)[0],
             {"K0-series": lambda: math.sqrt(20) * math.exp(10) * bessel_k0_series(10.0) / math.sqrt(math.pi)},
             1e-6))
    for r in (0.5, 1.0, 3.0):
        add(Case(f"confluent/bessel-K0/r={r}", "degenerate",
                 lambda r=r: math.sqrt(math.pi) * math.exp(-r) * cfl.tricomi_U(P(0, 0), 2 * r),
                 {"K0-series": lambda r=r: bessel_k0_series(r)}, 1e-8))
    for alpha in (0.3, -1.6):
        for theta in (0.0, 1.2):
            for z in (0.5, 1.0, 4.0):
                for sol in ("kummer", "second", "tricomi"):
                    add(Case(f"confluent/ode-residual/{sol}/t={theta}/a={alpha}/z={z}", "ode",
                             lambda sol=sol, theta=theta, alpha=alpha, z=z: _ode_residual(sol, theta, alpha, z),
                             {"zero": lambda: 0.0}, 1e-8))
    return cases


def _ode_residual(sol: str, theta, alpha, z) -> float:
    p = cfl.LieParams(theta, alpha)
    if sol == "kummer":
        f0, f1, f2 = cfl.kummer_F_derivatives(p, z)
    elif sol == "second":
        g0, g1, g2 = cfl.kummer_F_derivatives(p.reflected(), z)
        w = z ** (-alpha)
        f0 = w * g0
        f1 = w * (g1 - alpha / z * g0)
        f2 = w * (g2 - 2 * alpha / z * g1 + alpha * (alpha + 1) / z ** 2 * g0)
    else:
        f0, f1, f2 = cfl.tricomi_U_connection_derivatives(p, z)
    a = p.a
    terms = (z * f2, (1 + alpha - z) * f1, a * f0)
    scale = sum(abs(t) for t in terms)
    return abs(terms[0] + terms[1] - terms[2]) / scale


_THETA_PAIRS = ((0.0, 1.2), (0.0, 2.8), (1.2, 2.8))
_ANOMALOUS_THETAS = ((0.4, 1.7), (2.4, 0.6), (-0.3, 1.1))


def _tricomi_integral(t1, t2, alpha, cfg, order=None):
    spec = ex.BilinearIntegrandSpec(ex.PairKind.TricomiPair, (t1, t2, alpha), order)
    return ex.pair_integrand(spec).integrate(cfg.quad).value


def _tricomi_bilinear_suite(cfg: VerifyConfig) -> list:
    cases = []
    add = cases.append
    convergent = ((2.0, 0.0, 0.0), (0.0, 0.0, 0.0), (-0.5, 1.5, 0.0), (1.2, 0.0, 0.3), (2.8, 1.2, 0.3),
                  (0.0, 2.8, -0.6), (1.2, 1.2, -0.6), (0.5, -0.5, 0.5), (2.8, 0.0, -0.3),
                  (1.7, 0.4, 0.9), (0.4, 1.7, -0.9), (3.0, 3.0, 0.45))
    for t1, t2, a in convergent:
        add(Case(f"tricomi/convergent/t1={t1}/t2={t2}/a={a}", "convergent",
                 lambda t1=t1, t2=t2, a=a: cf.tricomi_bilinear(t1, t2, a),
                 {"quadrature": lambda t1=t1, t2=t2, a=a: _tricomi_integral(t1, t2, a, cfg)}, 1e-7))
    add(Case("tricomi/convergent/value/4-over-pi", "convergent", lambda: cf.tricomi_bilinear(2, 0, 0),
             {"exact": lambda: 4 / math.pi}, 1e-12))
    add(Case("tricomi/convergent/value/pi-over-2", "convergent", lambda: cf.tricomi_bilinear(0, 0, 0),
             {"exact": lambda: math.pi / 2}, 1e-12))
    for a in (-0.6, 0.3, -1.4, -2.3):
        for t1, t2 in _THETA_PAIRS:
            add(Case(f"tricomi/generalized/t1={t1}/t2={t2}/a={a}", "generalized",
                     lambda t1=t1, t2=t2, a=a: cf.tricomi_bilinear(t1, t2, a),
                     {"genquad": lambda t1=t1, t2=t2, a=a: _tricomi_integral(t1, t2, a, cfg)}, 1e-7))
    for theta, a in ((1.2, 0.3), (1.2, -1.4), (0.7, -2.0), (2.5, 1.0)):
        h = 1e-5
        add(Case(f"tricomi/equal-theta-limit/t={theta}/a={a}", "equal-theta",
                 lambda theta=theta, a=a: cf.tricomi_bilinear(theta, theta, a),
                 {"richardson": lambda theta=theta, a=a: _sym_limit(
                     lambda e: cf.tricomi_bilinear(theta, theta + e, a), 2 * h)}, 1e-6))
    for a in (-2, -1, 1, 2):
        for t1, t2 in _ANOMALOUS_THETAS:
            add(Case(f"tricomi/anomalous/t1={t1}/t2={t2}/a={a:+d}", "anomalous",
                     lambda t1=t1, t2=t2, a=a: cf.tricomi_bilinear(t1, t2, a),
                     {"genquad": lambda t1=t1, t2=t2, a=a: _tricomi_integral(t1, t2, a, cfg),
                      "dimreg": lambda t1=t1, t2=t2, a=a: dr.tricomi_anomalous_value(t1, t2, abs(a))},
                     1e-6))
    for a in (-2, 1):
        add(Case(f"tricomi/anomalous-equal/t=1.3/a={a:+d}", "anomalous",
                 lambda a=a: cf.tricomi_bilinear(1.3, 1.3, a),
                 {"genquad": lambda a=a: _tricomi_integral(1.3, 1.3, a, cfg)}, 1e-6))
    for a in (0.5, -1.5, -1, -2):
        for m in range(4):
            for n in range(4):
                def scaled(m=m, n=n, a=a):
                    return cf.laguerre_gram_entry(m, n, a)[0] * math.factorial(m) * math.factorial(n) * (-1) ** (m + n)
                add(Case(f"tricomi/laguerre-degenerate/a={a}/m={m}/n={n}", "degenerate",
                         scaled, {"tricomi": lambda m=m, n=n, a=a:
                                  cf.tricomi_bilinear(-1 - a - 2 * m, -1 - a - 2 * n, a)}, 1e-6))
    return cases


def _laguerre_oracle(m, n, alpha, cfg, order=None):
    spec = ex.BilinearIntegrandSpec(ex.PairKind.LaguerrePair, (m, n, alpha), order)
    return ex.pair_integrand(spec).integrate(cfg.quad).value


def _gram(m, n, alpha):
    return cf.laguerre_gram_entry(m, n, alpha)[0]


def _laguerre_gram_suite(cfg: VerifyConfig) -> list:
    cases = []
    add = cases.append
    for a in (0, 0.5, 2, -0.3):
        for m in range(6):
            for n in range(6):
                add(Case(f"laguerre/classical/a={a}/m={m}/n={n}", "classical",
                         lambda m=m, n=n, a=a: _gram(m, n, a),
                         {"genquad": lambda m=m, n=n, a=a: _laguerre_oracle(m, n, a, cfg)}, 1e-8))
    for a in (-1.5, -2.7):
        for m in range(5):
            for n in range(5):
                add(Case(f"laguerre/generalized/a={a}/m={m}/n={n}", "classical",
                         lambda m=m, n=n, a=a: _gram(m, n, a),
                         {"genquad": lambda m=m, n=n, a=a: _laguerre_oracle(m, n, a, cfg)}, 1e-7))
    for a in (-1, -2, -3):
        M = -a
        for m in range(6):
            for n in range(6):
                if min(m, n) >= M:
                    add(Case(f"laguerre/reduced/a={a}/m={m}/n={n}", "reduced-classical",
                             lambda m=m, n=n, a=a: _gram(m, n, a),
                             {"genquad": lambda m=m, n=n, a=a: _laguerre_oracle(m, n, a, cfg)}, 1e-8))
                    continue
                add(Case(f"laguerre/anomalous/a={a}/m={m}/n={n}", "anomalous",
                         lambda m=m, n=n, a=a: _gram(m, n, a),
                         {"genquad": lambda m=m, n=n, a=a: _laguerre_oracle(m, n, a, cfg),
                          "dimreg": lambda m=m, n=n, M=M: dr.laguerre_anomalous_value(m, n, M)}, 1e-6))
    add(Case("laguerre/spot/a=-1/m=0/n=0", "anomalous", lambda: _gram(0, 0, -1),
             {"-euler-gamma": lambda: -sc.EULER_GAMMA}, 1e-12))
    add(Case("laguerre/spot/a=-1/m=1/n=0", "anomalous", lambda: _gram(1, 0, -1),
             {"gram-display": lambda: -1.0}, 1e-12))
    for a in (-1, -2, -3):
        G = cf.gram_matrix(a, 6)
        M = -a

        def sym(G=G):
            return float(abs(G.entries - G.entries.T).max())

        def tags(G=G, M=M):
            bad = 0
            for i in range(6):
                for j in range(6):
                    want = cf.Regime.ReducedClassical if min(i, j) >= M else cf.Regime.Anomalous
                    bad += G.regime[i][j] is not want
            return bad

        def signs(G=G, M=M, a=a):
            bad = 0
            for i in range(6):
                for j in range(6):
                    n, m = min(i, j), max(i, j)
                    if m != n and n < M:
                        bad += (G.entries[i, j].real > 0) != ((-1) ** (a + n) > 0)
            return bad

        add(Case(f"laguerre/gram/a={a}/symmetry", "structure", sym, {"zero": lambda: 0.0}, 0.0))
        add(Case(f"laguerre/gram/a={a}/regime-tags", "structure", tags, {"zero": lambda: 0}, 0.0, exact=True))
        add(Case(f"laguerre/gram/a={a}/sign-oscillation", "structure", signs, {"zero": lambda: 0}, 0.0,
                 exact=True))
    return cases


def _dimreg_suite(cfg: VerifyConfig) -> list:
    cases = []
    add = cases.append
    g = dr.gamma_family()
    add(Case("dimreg/gamma/fp/m=1", "finite-part", lambda: dr.finite_part(g, 1),
             {"laurent": lambda: -sc.EULER_GAMMA}, 1e-7))
    add(Case("dimreg/gamma/anomalous/m=1", "anomalous", lambda: dr.anomalous_value(g, 1),
             {"genquad": lambda: gq.gen_integrate(lambda z: math.exp(-z) / z,
                                                  gq.SingularExpansion.of((-1, 1)), cfg.quad).value}, 1e-7))
    add(Case("dimreg/gamma/anomalous/m=2", "anomalous", lambda: dr.anomalous_value(g, 2),
             {"genquad": lambda: gq.gen_integrate(lambda z: math.exp(-z) / z ** 2,
                                                  gq.SingularExpansion.of((-2, 1), (-1, -1)), cfg.quad).value,
              "-psi(2)": lambda: -sc.digamma(2)}, 1e-7))
    for t1, t2, m in ((2.4, 0.6, 1), (3.0, 1.0, 2), (0.4, 1.7, 1), (1.1, 0.2, 3)):
        fam = dr.tricomi_family(t1, t2)
        add(Case(f"dimreg/tricomi/fp/t1={t1}/t2={t2}/m={m}", "finite-part",
                 lambda t1=t1, t2=t2, m=m: cf.tricomi_bilinear_finite_part(t1, t2, m),
                 {"eps-sweep": lambda fam=fam, m=m: dr.finite_part(fam, m)}, 1e-6))
        add(Case(f"dimreg/tricomi/residue/t1={t1}/t2={t2}/m={m}", "residue",
                 lambda fam=fam, m=m: fam.coeff_at(-m, m - 1),
                 {"eps-sweep": lambda fam=fam, m=m: dr.residue(fam, m)}, 1e-6))
        add(Case(f"dimreg/tricomi/symmetry/t1={t1}/t2={t2}/m={m}", "finite-part",
                 lambda t1=t1, t2=t2, m=m: cf.tricomi_bilinear_finite_part(t1, t2, m),
                 {"swapped": lambda t1=t1, t2=t2, m=m: cf.tricomi_bilinear_finite_part(t2, t1, m)}, 1e-14))
    return cases


SUITE_BUILDERS = {
    "identities": _identities,
    "confluent": _confluent,
    "tricomi-bilinear": _tricomi_bilinear_suite,
    "laguerre-gram": _laguerre_gram_suite,
    "dimreg": _dimreg_suite,
}
