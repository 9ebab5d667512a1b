from fractions import Fraction

import pytest

from thetacancel.qseries import QSeries, RootSeries, TruncationError


def test_min_order_semantics():
    a = QSeries.from_list([1, 2, 3, 4], order=3)
    b = QSeries.from_list([1, 1], order=1)
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_coefficient_beyond_order_raises():
    a = QSeries.from_list([1, 2])
    with pytest.raises(TruncationError):
        a.coefficient(2)


def test_invert_geometric():
    one_minus = QSeries({0: Fraction(1), 2: Fraction(-1)}, 8)
    inv = one_minus.invert()
    assert inv == QSeries({k: Fraction(1) for k in range(0, 9, 2)}, 8)


def test_flip_half_and_truncate():
    a = QSeries.from_list([1, 2, 3, 4])
    assert a.flip_half().coeffs == {0: 1, 1: -2, 2: 3, 3: -4}
    assert a.truncate(1).order == 1
    with pytest.raises(TruncationError):
        a.truncate(5)


def test_evaluate():
    a = QSeries.from_list([1, 2])
    assert a.evaluate(0.5) == pytest.approx(2.0)


def test_root_series_parity_and_reflect():
    f = RootSeries.exp(1, 5, 2)
    even = (f + f.reflect()) * Fraction(1, 2)
    odd = (f - f.reflect()) * Fraction(1, 2)
    assert even.parity() == 1 and odd.parity() == -1 and f.parity() is None


def test_root_series_inverse_and_derivative():
    f = RootSeries.exp(2, 6, 2)
    assert f * f.inverse() == RootSeries.constant(1, 6, 2)
    assert f.derivative() == RootSeries.exp(2, 5, 2) * 2


def test_json_round_trip():
    a = QSeries({0: Fraction(1, 3), 3: Fraction(-2)}, 4)
    assert QSeries.from_json(a.to_json(), 4) == a
