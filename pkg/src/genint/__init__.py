"""Confluent functions, Laguerre polynomials and generalized (finite-part) integrals."""

from genint.scalar import (
    PoleError,
    digamma,
    gamma,
    harmonic,
    lemma_b2_values,
    ln_gamma,
    pochhammer,
    pochhammer_weighted_harmonic,
    rgamma,
    trigamma,
)
from genint.confluent import (
    LieParams,
    asymptotic_2F0,
    kummer_F,
    olver_bF,
    tricomi_U,
    tricomi_U_degenerate,
)
from genint.laguerre import LaguerrePoly, laguerre_build, laguerre_eval
from genint.genquad import (
    GenIntegralResult,
    QuadratureConfig,
    SingularExpansion,
    gen_integrate,
    regular_value,
)
from genint.closed_forms import (
    GramMatrix,
    Regime,
    gram_matrix,
    laguerre_gram_entry,
    tricomi_bilinear,
    tricomi_bilinear_finite_part,
)

__version__ = "0.1.0"
