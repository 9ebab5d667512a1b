import cmath

import pytest

from thetacancel.theta_numeric import (formal_vs_numeric, numeric_modular_pair, numeric_theta,
                                       numeric_theta_prime, numeric_transformation_suite)


def test_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        numeric_theta(0.1, -1j)
    with pytest.raises(ValueError):
        numeric_transformation_suite(samples=[0.5 - 0.1j])


def test_theta_is_odd_and_others_even():
    tau, v = 1 + 1j, 0.2 + 0.05j
    assert numeric_theta(-v, tau) == pytest.approx(-numeric_theta(v, tau))
    for k in ("theta1", "theta2", "theta3"):
        assert numeric_theta(-v, tau, k) == pytest.approx(numeric_theta(v, tau, k))


def test_derivative_matches_finite_difference():
    tau, v, h = 2j, 0.3 + 0.1j, 1e-6
    for k in ("theta", "theta1", "theta2", "theta3"):
        fd = (numeric_theta(v + h, tau, k) - numeric_theta(v - h, tau, k)) / (2 * h)
        assert abs(fd - numeric_theta_prime(v, tau, k)) < 1e-6


def test_suite_all_pass():
    entries = numeric_transformation_suite()
    assert entries and all(e["status"] == "pass" for e in entries)


def test_formal_vs_numeric():
    assert all(e["status"] == "pass" for e in formal_vs_numeric(2j, 1e-8))


def test_wrong_law_fails():
    # delta2 is not invariant under S; the suite would catch a wrong law
    tau = 1 + 1j
    lhs = numeric_modular_pair(2, -1 / tau)[0]
    assert abs(lhs - numeric_modular_pair(2, tau)[0]) > 1e-3
    assert abs(lhs - tau ** 2 * numeric_modular_pair(1, tau)[0]) < 1e-9
    assert cmath.isfinite(lhs)
