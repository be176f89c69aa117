"""Finite parts, residues and anomalous values by continuation in alpha."""

import math

import pytest

from genint import closed_forms as cf
from genint import dimreg as dr
from genint import expansions as ex
from genint.genquad import SingularExpansion, gen_integrate
from genint.scalar import digamma, gamma

EULER = 0.5772156649015329


class TestGammaFamily:
    def test_finite_part(self):
        assert dr.finite_part(dr.gamma_family(), 1) == pytest.approx(-EULER, abs=1e-9)

    def test_finite_part_with_error(self):
        fp, err = dr.finite_part(dr.gamma_family(), 2, return_error=True)
        assert err < 1e-6
        # Gamma(1+a) near a = -2: -1/(a+2) + (gamma - 1) + ...
        assert fp == pytest.approx(EULER - 1, abs=1e-9)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_anomalous_value(self, m):
        # gen_int z^{-m} e^{-z} = (-1)^(m+1) psi(m) / (m-1)!
        expected = (-1) ** (m + 1) * digamma(m) / math.factorial(m - 1)
        assert dr.anomalous_value(dr.gamma_family(), m) == pytest.approx(expected, abs=1e-9)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_against_genquad(self, m):
        exp0 = SingularExpansion(tuple((-m + j, (-1) ** j / math.factorial(j)) for j in range(m)))
        q = gen_integrate(lambda z: z ** -m * math.exp(-z), exp0).value
        assert dr.anomalous_value(dr.gamma_family(), m) == pytest.approx(q, abs=1e-9)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_residue(self, m):
        fam = dr.gamma_family()
        assert dr.residue(fam, m) == pytest.approx(fam.coeff_at(-m, m - 1), abs=1e-6)

    def test_no_pole_gives_plain_value(self):
        fam = dr.AlphaFamily(lambda a: math.exp(a), lambda a, n: 0.0)
        assert dr.finite_part(fam, 1) == pytest.approx(math.exp(-1), rel=1e-10)

    def test_bad_m(self):
        with pytest.raises(ValueError):
            dr.anomalous_value(dr.gamma_family(), 0)


class TestCoefficientDerivative:
    def test_numeric_matches_analytic(self):
        fam = dr.AlphaFamily(lambda a: 0, lambda a, n: gamma(2 - a) * n)
        d = dr.coefficient_derivative(fam, -0.5, 3)
        assert d == pytest.approx(-3 * gamma(2.5) * digamma(2.5), rel=1e-9)

    def test_uses_analytic(self):
        fam = dr.AlphaFamily(lambda a: 0, lambda a, n: 1, coeff_derivative=lambda a, n: 42)
        assert dr.coefficient_derivative(fam, -1, 0) == 42


class TestTricomiFamily:
    @pytest.mark.parametrize("t1, t2", [(2.4, 0.6), (0.4, 1.7), (-0.3, 1.1)])
    @pytest.mark.parametrize("m", [1, 2])
    def test_finite_part_formula(self, t1, t2, m):
        fp = dr.finite_part(dr.tricomi_family(t1, t2), m)
        assert fp == pytest.approx(cf.tricomi_bilinear_finite_part(t1, t2, m), rel=1e-7)

    @pytest.mark.parametrize("t1, t2", [(2.4, 0.6), (0.4, 1.7)])
    @pytest.mark.parametrize("m", [1, 2])
    def test_three_way(self, t1, t2, m):
        d = dr.tricomi_anomalous_value(t1, t2, m)
        c = cf.tricomi_bilinear(t1, t2, -m)
        spec = ex.BilinearIntegrandSpec(ex.PairKind.TricomiPair, (t1, t2, -m))
        q = ex.pair_integrand(spec).integrate().value
        assert abs(d - c) < 1e-6 * max(1, abs(c))
        assert abs(d - q) < 1e-6 * max(1, abs(c))

    @pytest.mark.parametrize("m", [1, 2])
    def test_residue(self, m):
        t1, t2 = 0.4, 1.7
        fam = dr.tricomi_family(t1, t2)
        assert dr.residue(fam, m) == pytest.approx(fam.coeff_at(-m, m - 1), rel=1e-6)


class TestLaguerreFamily:
    @pytest.mark.parametrize("M", [1, 2, 3])
    def test_matches_gram(self, M):
        for m in range(5):
            for n in range(5):
                if min(m, n) >= M:
                    continue
                v, _ = cf.laguerre_gram_entry(m, n, -M)
                assert dr.laguerre_anomalous_value(m, n, M) == pytest.approx(v, abs=1e-6 * max(1, abs(v)))

    def test_residue(self):
        fam = dr.laguerre_family(0, 0)
        assert dr.residue(fam, 1) == pytest.approx(1, abs=1e-6)
