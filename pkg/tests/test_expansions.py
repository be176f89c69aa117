"""Small-z expansions of the bilinear integrands."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from genint import expansions as ex
from genint.expansions import BilinearIntegrandSpec, PairKind
from genint.genquad import QuadratureConfig
from genint.scalar import gamma, rgamma


def mp_U(a, c, z):
    """Tricomi U for non-integer c via the connection formula in mpmath."""
    return (mpmath.gamma(1 - c) / mpmath.gamma(a - c + 1) * mpmath.hyp1f1(a, c, z)
            + mpmath.gamma(c - 1) / mpmath.gamma(a) * z ** (1 - c) * mpmath.hyp1f1(a - c + 1, 2 - c, z))


def mp_coefficient(t1, t2, alpha, p, dps=80, terms=6):
    """Coefficient of z^{alpha+p} from high-precision integrand values.

    The integrand near 0 is a combination of z^{alpha+j}, z^j and z^{-alpha+j};
    ``3*terms`` of these are solved for exactly from as many sample points.
    """
    key = (t1, t2, alpha, dps, terms)
    if key not in mp_coefficient_cache:
        with mpmath.workdps(dps):
            al = mpmath.mpf(alpha)
            a1, a2 = ((1 + al + mpmath.mpf(t)) / 2 for t in (t1, t2))
            c = 1 + al
            exps = [al + j for j in range(terms)] + [mpmath.mpf(j) for j in range(terms)] \
                + [-al + j for j in range(terms)]
            zs = [mpmath.mpf(10) ** (-4 - mpmath.mpf(2 * i) / len(exps)) for i in range(len(exps))]
            A = mpmath.matrix([[z ** e for e in exps] for z in zs])
            b = mpmath.matrix([mp_U(a1, c, z) * mp_U(a2, c, z) * mpmath.exp(-z) * z ** al for z in zs])
            mp_coefficient_cache[key] = mpmath.lu_solve(A, b)
    return complex(mp_coefficient_cache[key][p])


mp_coefficient_cache = {}


def tricomi(t1, t2, alpha, order=None):
    return ex.pair_integrand(BilinearIntegrandSpec(PairKind.TricomiPair, (t1, t2, alpha), order))


def laguerre(m, n, alpha, order=None):
    return ex.pair_integrand(BilinearIntegrandSpec(PairKind.LaguerrePair, (m, n, alpha), order))


class TestTricomiCoefficient:
    def test_leading_term(self):
        t1, t2, a = 0.4, 1.7, -2.5
        expected = gamma(2.5) ** 2 * rgamma((3.5 + t1) / 2) * rgamma((3.5 + t2) / 2)
        assert ex.tricomi_pair_coefficient(t1, t2, a, 0) == pytest.approx(expected, rel=1e-14)

    def test_laguerre_parameter(self):
        a = -1.5
        th = -1 - a
        assert ex.tricomi_pair_coefficient(th, th, a, 0) == pytest.approx(1, rel=1e-14)

    @pytest.mark.parametrize("t1, t2", [(0.4, 1.7), (2.4, 0.6), (-0.3, 1.1)])
    @pytest.mark.parametrize("alpha, p", [(-1.2, 0), (-1.2, 1), (-2.3, 1), (-2.3, 2), (-1.7, 1), (-2.8, 2)])
    def test_high_precision_extraction(self, t1, t2, alpha, p):
        assert ex.tricomi_pair_coefficient(t1, t2, alpha, p) == pytest.approx(
            mp_coefficient(t1, t2, alpha, p), rel=1e-10)

    @pytest.mark.parametrize("t1, t2", [(0.4, 1.7), (2.4, 0.6), (-0.3, 1.1)])
    @pytest.mark.parametrize("alpha, p", [(-1.2, 1), (-1.7, 1), (-2.3, 1)])
    def test_numerical_fit(self, t1, t2, alpha, p):
        f = tricomi(t1, t2, alpha).f
        known = [ex.tricomi_pair_coefficient(t1, t2, alpha, j) for j in range(p)]
        # the cross-term chain starts at z^0, just above z^{alpha+p}
        nxt = 0.0 if alpha + p < 0 < alpha + p + 1 else None
        fit = ex.numerical_fit_coefficient(lambda z: f(np.array([z]))[0], alpha, known,
                                           z_points=(1e-5, 1e-6), next_exponent=nxt)
        c = ex.tricomi_pair_coefficient(t1, t2, alpha, p)
        assert abs(fit - c) < 1e-4 * abs(c)

    def test_numerical_fit_polynomial(self):
        f = lambda z: 2 * z ** -1.5 + 3 * z ** -0.5 + 5 * z ** 0.5
        assert ex.numerical_fit_coefficient(f, -1.5, [2]) == pytest.approx(3, rel=1e-6)

    def test_even_in_alpha(self):
        assert ex.tricomi_pair_coefficient(0.3, 1.1, 1.6, 1) == pytest.approx(
            ex.tricomi_pair_coefficient(0.3, 1.1, -1.6, 1), rel=1e-15)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ex.tricomi_pair_coefficient(0.3, 1.1, -1.2, 3)
        with pytest.raises(ValueError):
            ex.tricomi_pair_coefficient(0.3, 1.1, -2, 2)
        with pytest.raises(ValueError):
            ex.tricomi_pair_coefficient(0.3, 1.1, -2.5, -1)

    def test_integer_alpha_is_limit(self):
        t1, t2 = 0.4, 1.7
        for M in (1, 2, 3):
            for p in range(M):
                direct = ex.tricomi_pair_coefficient(t1, t2, -M, p)
                e = 1e-5
                lim = 0.5 * (ex.tricomi_pair_coefficient(t1, t2, -M + e, p)
                             + ex.tricomi_pair_coefficient(t1, t2, -M - e, p))
                assert direct == pytest.approx(lim, rel=1e-8)

    @pytest.mark.parametrize("alpha, expected", [(-0.5, -1), (-1.2, 0), (-2.3, 1), (-2, 1), (-1, 0), (3, 2)])
    def test_min_order(self, alpha, expected):
        assert ex.tricomi_pair_min_order(alpha) == expected


class TestLaguerreExpansion:
    def test_examples(self):
        assert ex.laguerre_pair_expansion(0, 0, -1, 1).terms == ((-1, 1), (0, -1))
        assert ex.laguerre_pair_expansion(1, 0, -1, 2).terms == ((0, -1), (1, 1))
        assert ex.laguerre_pair_coefficients(1, 1, -2, 2) == [1, 1, Fraction(-1, 2)]

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 5), st.integers(0, 5),
           st.fractions(min_value=-6, max_value=3, max_denominator=5), st.integers(0, 9))
    def test_exact_vs_sympy(self, m, n, alpha, order):
        z = sympy.Symbol("z")
        a = sympy.Rational(alpha.numerator, alpha.denominator)
        prod = sympy.assoc_laguerre(m, a, z) * sympy.assoc_laguerre(n, a, z) * sympy.exp(-z)
        ser = sympy.series(prod, z, 0, order + 1).removeO()
        ref = [sympy.Rational(ser.coeff(z, j)) for j in range(order + 1)]
        ref = [Fraction(int(r.p), int(r.q)) for r in ref]
        assert ex.laguerre_pair_coefficients(m, n, alpha, order) == ref

    def test_float_alpha(self):
        got = ex.laguerre_pair_coefficients(2, 1, -1.7, 4)
        exact = ex.laguerre_pair_coefficients(2, 1, Fraction(-17, 10), 4)
        np.testing.assert_allclose(np.array(got, complex), np.array([float(c) for c in exact]), rtol=1e-13)

    @pytest.mark.parametrize("alpha, expected", [(-1, 0), (-2, 1), (-2.7, 1), (-0.5, -1), (-3, 2)])
    def test_min_order(self, alpha, expected):
        assert ex.laguerre_pair_min_order(alpha) == expected


class TestCrossConsistency:
    @pytest.mark.parametrize("alpha", [-1.5, -2.7, -2.3])
    @pytest.mark.parametrize("n1, n2", [(0, 0), (1, 0), (2, 1), (3, 3)])
    def test_tricomi_vs_laguerre(self, alpha, n1, n2):
        t1, t2 = -1 - alpha - 2 * n1, -1 - alpha - 2 * n2
        lag = ex.laguerre_pair_coefficients(n1, n2, alpha, ex.tricomi_pair_min_order(alpha))
        for p, c in enumerate(lag):
            # U_{-1-alpha-2n, alpha} = (-1)^n n! L_n^alpha
            tri = ex.tricomi_pair_coefficient(t1, t2, alpha, p)
            scale = math.factorial(n1) * math.factorial(n2) * (-1) ** (n1 + n2)
            assert abs(tri / scale - c) < 1e-8 * max(1, abs(c))


class TestIntegrands:
    @pytest.mark.parametrize("params", [(0.4, 1.7, -1.3), (2.4, 0.6, -2.6), (0.0, 1.2, 1.3), (1.1, 1.1, -2)])
    def test_remainder_consistent(self, params):
        pi = tricomi(*params)
        z = np.array([0.05, 0.3, 0.9])
        np.testing.assert_allclose(pi.remainder(z), pi.f(z) - pi.expansion.evaluate(z), rtol=1e-9)

    def test_laguerre_remainder(self):
        pi = laguerre(2, 1, -2)
        z = np.array([1e-3, 0.2, 0.9])
        np.testing.assert_allclose(pi.remainder(z), pi.f(z) - pi.expansion.evaluate(z), rtol=1e-8)

    @pytest.mark.parametrize("alpha", [-1.2, -1.7, -2.3, -2.8])
    @pytest.mark.parametrize("t1, t2", [(0.4, 1.7), (2.4, 0.6)])
    def test_padding_order(self, alpha, t1, t2):
        lo = ex.tricomi_pair_min_order(alpha)
        v1 = tricomi(t1, t2, alpha, lo).integrate().value
        v2 = tricomi(t1, t2, alpha, lo + 2).integrate().value
        assert abs(v1 - v2) < 1e-8 * max(1, abs(v1))

    def test_black_box_subtraction_agrees(self):
        # direct subtraction without the stable remainder, as a user would do it
        pi = tricomi(0.4, 1.7, -1.6)
        from genint.genquad import gen_integrate
        blind = gen_integrate(pi.f, pi.expansion, QuadratureConfig(integrand_ulps=16), vectorized=True).value
        assert blind == pytest.approx(pi.integrate().value, rel=1e-8)
