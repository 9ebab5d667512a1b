"""Exact rational scalars and the half-integer exponent lattice.

Rationals are :class:`fractions.Fraction`; the helpers here only fix the
serialization format and the handful of named operations the rest of the
package calls.  No floats are produced except through :func:`to_float`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def rat(x: RationalLike | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_add(a: RationalLike, b: RationalLike) -> Fraction:
    return rat(a) + rat(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return rat(a) * rat(b)


def rat_neg(a: RationalLike) -> Fraction:
    return -rat(a)


def rat_inv(a: RationalLike) -> Fraction:
    a = rat(a)
    if not a:
        raise ZeroDivisionError("rational inverse of zero")
    return 1 / a


def normalize(a: RationalLike) -> Fraction:
    """Lowest-terms form; Fraction already normalizes, so this is a copy."""
    a = rat(a)
    return Fraction(a.numerator, a.denominator)


def rat_str(a: RationalLike) -> str:
    a = rat(a)
    return f"{a.numerator}/{a.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def to_float(a: RationalLike) -> float:
    return float(a)


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element k/2 of the lattice of q-exponents, stored as k."""

    twice_value: int

    @classmethod
    def of(cls, x: "HalfInt | RationalLike") -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        x2 = 2 * rat(x)
        if x2.denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(x2))

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value + HalfInt.of(other).twice_value)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice_value)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return self + (-HalfInt.of(other))

    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        return f"{self.twice_value}/2"


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve an overdetermined exact linear system.

    Returns the unique solution when the system is consistent and has full
    column rank, otherwise ``None``.
    """
    ncols = len(rows[0]) if rows else 0
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < ncols:
        return None
    if any(r[-1] for r in m[row:]):
        return None
    return [m[i][-1] for i in range(ncols)]
