import pytest

from oracles import taylor
from thetacancel.charforms import HypothesisError
from thetacancel.cs_kernels import (cs_config, cs_form, cs_top, k0_poly, odd_constant_closed_form,
                                    phi_form)
from thetacancel.graded_ring import GradedPoly, top_component


@pytest.mark.parametrize("which", ["L", "W", "Wp"])
@pytest.mark.parametrize("d,n", [(4, 1), (5, 0), (6, 1)])
def test_phi_dual_path(which, d, n):
    a = phi_form(which, d, n, order=4)
    b = phi_form(which, d, n, order=4, path="direct")
    assert a.series == b.series and a.sqrt2_power == b.sqrt2_power


@pytest.mark.parametrize("which", ["L", "W", "Wp"])
def test_cs_form_linear_in_s(which):
    cfg = cs_config(5)
    s_index = cfg.index("s")
    form = cs_form(which, 5, 0, order=4)
    for poly in form.coeffs.values():
        assert all(e[s_index] == 1 for e in poly.terms)


def test_cs_top_is_degree_d():
    top = cs_top(cs_form("W", 6, 1, order=2))
    cfg = cs_config(6)
    for poly in top.coeffs.values():
        assert all(cfg.degree(e) == 6 for e in poly.terms)


def test_t_law():
    w = cs_top(cs_form("W", 6, 1, order=6))
    wp = cs_top(cs_form("Wp", 6, 1, order=6))
    assert w.flip_half() == wp


def test_l_constant_closed_form():
    top = cs_top(cs_form("L", 6, 1, order=2)).coefficient(0)
    assert top == top_component(odd_constant_closed_form(6, 1))


def test_k0_poly_taylor():
    cfg = cs_config(4)
    assert k0_poly(cfg, "a4") == GradedPoly.univariate(
        cfg, "a4", taylor("1/x - cosh(x/2)/(2*sinh(x/2))", cfg.cutoff))


def test_errors():
    with pytest.raises(ValueError):
        phi_form("X", 6, 1)
    with pytest.raises(ValueError):
        phi_form("W", 6, 1, path="other")
    with pytest.raises(HypothesisError):
        cs_form("W", 4, 2)
