from fractions import Fraction

import pytest

from thetacancel.exact_arith import HalfInt, parse_rat, rat, rat_inv, rat_str, solve_exact, to_float


def test_rat_str_round_trip():
    for x in (Fraction(-3, 4), Fraction(0), Fraction(7), Fraction(5, 6)):
        assert parse_rat(rat_str(x)) == x
    assert rat_str(Fraction(6, 4)) == "3/2"
    assert rat_str(-3) == "-3/1"


def test_rat_rejects_float_free_paths():
    assert rat("1/3") == Fraction(1, 3)
    assert to_float(Fraction(1, 4)) == 0.25
    with pytest.raises(ZeroDivisionError):
        rat_inv(0)


def test_half_int():
    a = HalfInt.of(Fraction(3, 2))
    assert a.twice_value == 3
    assert (a + HalfInt(1)).value() == 2
    assert str(a - HalfInt(4)) == "-1/2"
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_solve_exact_unique():
    rows = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)], [Fraction(1), Fraction(1)]]
    x = [Fraction(1, 2), Fraction(-1)]
    rhs = [sum(r[i] * x[i] for i in range(2)) for r in rows]
    assert solve_exact(rows, rhs) == x


def test_solve_exact_inconsistent_and_deficient():
    rows = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert solve_exact(rows, [Fraction(1), Fraction(1), Fraction(3)]) is None
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert solve_exact(rows, [Fraction(1), Fraction(2)]) is None
