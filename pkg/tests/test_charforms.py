import pytest
import sympy

from oracles import taylor
from thetacancel.charforms import (HypothesisError, ThetaBundleSpec, VirtualBundle, a_hat,
                                   ch_tangent, ch_theta_bundle, check_hypothesis, euler_pair,
                                   even_base, l_hat, lambda_t, m0_even, m0_twisted, q_form,
                                   q_form_direct, q_form_series_top, s_t)
from thetacancel.graded_ring import GradedPoly, RingConfig, top_component


def _sympy_to_poly(expr, sym, cfg, var):
    coeffs = taylor(expr.subs(sym, sympy.Symbol("x")), cfg.cutoff)
    return GradedPoly.univariate(cfg, var, coeffs)


def test_lambda_of_reduced_xi_against_direct_expansion():
    cfg = RingConfig(1, cutoff=6)
    t, c = sympy.symbols("t c")
    expr = (1 + sympy.exp(c) * t) * (1 + sympy.exp(-c) * t) / (1 + t) ** 2
    ser = sympy.series(expr, t, 0, 3).removeO()
    got = lambda_t(VirtualBundle.combination(xi=1), (1, 1), cfg, order=4)
    for k in range(3):
        expected = _sympy_to_poly(sympy.simplify(ser.coeff(t, k)), c, cfg, "c")
        assert got.coefficient(k) == expected


def test_s_t_inverts_lambda_minus_t():
    cfg = RingConfig(3)
    bundle = VirtualBundle.combination(tangent=1, xi0=-1)
    prod = s_t(bundle, (1, 2), cfg, 6) * lambda_t(bundle, (-1, 2), cfg, 6)
    assert prod.coeffs == {0: GradedPoly.one(cfg)}


def test_characteristic_forms_q0():
    cfg = RingConfig(2)
    a1 = GradedPoly.var(cfg, "a1")
    assert a_hat(cfg, 1) == GradedPoly.univariate(cfg, "a1", taylor("(x/2)/sinh(x/2)", 2))
    assert l_hat(cfg, 1) == GradedPoly.univariate(cfg, "a1", taylor("x/tanh(x/2)", 2))
    assert ch_tangent(cfg, 1, zero_roots=1) == GradedPoly.const(cfg, 3) + a1 * a1
    assert euler_pair(cfg, "c") == GradedPoly.var(cfg, "c", 2)


def test_theta2_first_coefficient_is_minus_reduced_tangent():
    cfg = RingConfig(3)
    ch = ch_theta_bundle(ThetaBundleSpec("2", 0, False), cfg, 2)
    assert ch.coefficient(0) == GradedPoly.one(cfg)
    assert ch.coefficient(1) == -(ch_tangent(cfg) - 6)


def test_m0_and_hypothesis():
    assert m0_even(5, 1) == 3 and m0_even(6, 1) == 2
    assert m0_twisted(5, 1) == 2 and m0_twisted(6, 1) == 3
    check_hypothesis("Q1", 6, 2)
    with pytest.raises(HypothesisError, match=r"d - \(2n"):
        check_hypothesis("Q1", 4, 2)
    with pytest.raises(HypothesisError, match=r"d - 1 - \(2n"):
        check_hypothesis("Q1p", 5, 2)
    with pytest.raises(HypothesisError):
        q_form("Q2", 4, 2)


# (3, 1) is excluded by the hypothesis d - m0 > 0
@pytest.mark.parametrize("d,n", [(3, 0), (4, 0), (4, 1)])
@pytest.mark.parametrize("which", ["Q1", "Q2"])
def test_dual_path_small(d, n, which):
    assert q_form(which, d, n, order=3) == q_form_direct(which, d, n, order=3)


@pytest.mark.parametrize("d,n", [(4, 0), (5, 0), (5, 1)])
@pytest.mark.parametrize("which", ["Q1p", "Q2p"])
def test_dual_path_twisted(d, n, which):
    assert q_form(which, d, n, order=4) == q_form_direct(which, d, n, order=4)


def test_dual_path_trivial_xi():
    assert q_form("Q2", 6, 1, order=4, trivial_xi=True) == q_form_direct("Q2", 6, 1, order=4, trivial_xi=True)


def test_q2_constant_term_is_even_base():
    P2 = q_form_series_top(q_form("Q2", 6, 1, order=2))
    assert P2.coefficient(0) == top_component(even_base(6, 1))


def test_unknown_form_rejected():
    with pytest.raises(ValueError):
        q_form("Q3", 6, 1)
    with pytest.raises(ValueError):
        q_form("Q1p", 6, 1, trivial_xi=True)
