from fractions import Fraction

import pytest

import oracles
from thetacancel.qseries import QSeries
from thetacancel.theta import (eta_cubed, jacobi_identity_check, log_derivative_kernel,
                               log_derivative_kernel_lambert, modular_pair, normalized_ratio,
                               theta_constant, theta_constant_sum, theta_series)


@pytest.mark.parametrize("kind", ["theta1", "theta2", "theta3"])
def test_theta_constant_product_equals_sum(kind):
    assert theta_constant(kind, 12) == theta_constant_sum(kind, 12)
    assert theta_constant(kind, 12).coeffs == oracles.theta_sum(kind, 12)


def test_theta2_leading_coefficients():
    t = theta_constant("theta2", 4)
    assert t.coeffs[1] == -2 and t.coeffs[4] == 2


def test_eta_cubed_is_odd_square_sum():
    # prod (1-q^j)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)
    expected = {0: 1, 2: -3, 6: 5, 12: -7}
    assert eta_cubed(12).coeffs == {k: Fraction(v) for k, v in expected.items()}


@pytest.mark.parametrize("level", [1, 2, 3])
def test_modular_pairs_match_divisor_sums(level):
    pair = modular_pair(level, 10)
    ref = oracles.modular_pairs(10)
    assert pair.delta.coeffs == oracles.nonzero(ref[f"delta{level}"])
    assert pair.epsilon.coeffs == oracles.nonzero(ref[f"epsilon{level}"])


def test_level_three_is_half_shift_of_level_two():
    p2, p3 = modular_pair(2, 8), modular_pair(3, 8)
    assert p2.delta.flip_half() == p3.delta
    assert p2.epsilon.flip_half() == p3.epsilon


def test_modular_pair_bad_level():
    with pytest.raises(ValueError):
        modular_pair(4, 4)


def test_jacobi_identity_and_negative_control():
    assert jacobi_identity_check(8)["status"] == "pass"
    bad = jacobi_identity_check(8, perturb={4: 1})
    assert bad["status"] == "fail"
    assert "q^(4/2)" in bad["details"][0]["got"]


@pytest.mark.parametrize("kind", ["theta", "theta1", "theta2", "theta3"])
def test_sum_and_product_forms_agree(kind):
    assert theta_series(kind, 7, 6, "sum") == theta_series(kind, 7, 6, "product")


def test_root_kernel_q0():
    s = normalized_ratio("theta", "root-kernel", 6, 4).series
    assert s.q0_part() == oracles.taylor("(x/2)/sinh(x/2)", 6)


def test_euler_kernel_q0_is_sinh_half():
    s = normalized_ratio("theta", "euler-kernel", 7, 4).series
    assert s.q0_part() == oracles.taylor("sinh(x/2)", 7)


@pytest.mark.parametrize("kind", ["theta1", "theta2", "theta3"])
def test_ratio_even_and_normalized(kind):
    s = normalized_ratio(kind, "ratio", 6, 6).series
    assert s.parity() == 1
    assert s.coefficient(0) == QSeries.constant(1, 6)


@pytest.mark.parametrize("kind", ["theta1", "theta2", "theta3"])
def test_log_derivative_kernel_against_lambert(kind):
    k = log_derivative_kernel(kind, 7, 6).series
    assert k == log_derivative_kernel_lambert(kind, 7, 6)
    assert k.parity() == -1


def test_kernel_q0_closed_forms():
    k1 = log_derivative_kernel("theta1", 7, 2).series.q0_part()
    k2 = log_derivative_kernel("theta2", 7, 2).series.q0_part()
    # 1/b - 1/sinh b and 1/b - coth(b/2)/2, regular at 0
    assert k1 == oracles.taylor("1/x - 1/sinh(x)", 7)
    assert k2 == oracles.taylor("1/x - cosh(x/2)/(2*sinh(x/2))", 7)


def test_ratio_of_theta_rejected():
    with pytest.raises(ValueError):
        normalized_ratio("theta", "ratio", 4, 4)
