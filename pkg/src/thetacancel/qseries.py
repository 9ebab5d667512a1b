"""Truncated series in q^(1/2).

Exponents are stored as integers k meaning q^(k/2).  ``order`` is the largest
k whose coefficient is known; anything above it is unknown rather than zero.
Coefficients are either Fractions (``ring is None``) or GradedPoly elements of
one fixed RingConfig.

:class:`RootSeries` is a power series in one root variable whose coefficients
are rational q-series; it carries the normalized theta ratios.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import factorial

from .exact_arith import HalfInt, rat_str
from .graded_ring import GradedPoly, RingConfig

DEFAULT_ORDER = 8


class TruncationError(ValueError):
    """Requested a coefficient that lies beyond the truncation order."""


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


def _coef_inverse(c):
    return c.inverse() if isinstance(c, GradedPoly) else 1 / Fraction(c)


class QSeries:
    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs: dict | None = None, order: int = DEFAULT_ORDER,
                 ring: RingConfig | None = None):
        self.order = order
        self.ring = ring
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v and k <= order}

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER, ring: RingConfig | None = None):
        if ring is not None and _is_scalar(value):
            value = GradedPoly.const(ring, value)
        elif ring is None:
            value = Fraction(value)
        return cls({0: value}, order, ring)

    @classmethod
    def monomial(cls, k: int, value=1, order: int = DEFAULT_ORDER, ring=None):
        """value * q^(k/2)."""
        if ring is not None and _is_scalar(value):
            value = GradedPoly.const(ring, value)
        elif ring is None:
            value = Fraction(value)
        return cls({k: value}, order, ring)

    @classmethod
    def from_list(cls, values, order: int | None = None):
        order = len(values) - 1 if order is None else order
        return cls({k: Fraction(v) for k, v in enumerate(values)}, order)

    def _one(self):
        return GradedPoly.one(self.ring) if self.ring is not None else Fraction(1)

    def _zero(self):
        return GradedPoly.zero(self.ring) if self.ring is not None else Fraction(0)

    # protocol

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.order == other.order and self.ring == other.ring
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return f"QSeries({self.to_string()}, order={self.order})"

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            vs = v.to_string() if isinstance(v, GradedPoly) else str(v)
            parts.append(vs if k == 0 else f"({vs})*q^({k}/2)")
        return " + ".join(parts)

    def coefficient(self, k: "HalfInt | int") -> object:
        """Coefficient of q^(k/2); ``k`` is the doubled exponent or a HalfInt."""
        k = k.twice_value if isinstance(k, HalfInt) else k
        if k > self.order:
            raise TruncationError(f"coefficient of q^({k}/2) unknown beyond order {self.order}/2")
        return self.coeffs.get(k, self._zero())

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def min_exponent(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    # arithmetic

    def _combine_ring(self, other: "QSeries") -> RingConfig | None:
        if self.ring is None:
            return other.ring
        if other.ring is None or other.ring == self.ring:
            return self.ring
        raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if _is_scalar(other) or isinstance(other, GradedPoly):
            ring = other.config if isinstance(other, GradedPoly) else self.ring
            return QSeries.constant(other, self.order, ring)
        return NotImplemented

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self._combine_ring(other)
        order = min(self.order, other.order)
        out = {}
        for src in (self.coeffs, other.coeffs):
            for k, v in src.items():
                if k <= order:
                    out[k] = out[k] + v if k in out else v
        if ring is not None:
            out = {k: (GradedPoly.const(ring, v) if _is_scalar(v) else v) for k, v in out.items()}
        return QSeries(out, order, ring)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries({k: -v for k, v in self.coeffs.items()}, self.order, self.ring)

    def __sub__(self, other) -> "QSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, k) -> "QSeries":
        return QSeries({e: v * k for e, v in self.coeffs.items()}, self.order,
                       k.config if isinstance(k, GradedPoly) else self.ring)

    def __mul__(self, other) -> "QSeries":
        if _is_scalar(other) or isinstance(other, GradedPoly):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        ring = self._combine_ring(other)
        order = min(self.order, other.order)
        out = {}
        right = sorted(other.coeffs.items())
        for k1, v1 in self.coeffs.items():
            for k2, v2 in right:
                k = k1 + k2
                if k > order:
                    break
                p = v1 * v2
                out[k] = out[k] + p if k in out else p
        return QSeries(out, order, ring)

    def __rmul__(self, other) -> "QSeries":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.invert() ** (-k)
        result = QSeries.constant(1, self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self) -> "QSeries":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of the zero series")
        k0 = min(self.coeffs)
        lead = self.coeffs[k0]
        if isinstance(lead, GradedPoly) and not lead.constant_term():
            raise ZeroDivisionError("leading coefficient is not a unit")
        n = self.order - k0
        u = {k - k0: v for k, v in self.coeffs.items()}
        binv = _coef_inverse(lead)
        b = {0: binv}
        for m in range(1, n + 1):
            s = None
            for j in range(1, m + 1):
                if j in u and (m - j) in b:
                    t = u[j] * b[m - j]
                    s = t if s is None else s + t
            if s is not None and s:
                b[m] = -(s * binv)
        return QSeries({k - k0: v for k, v in b.items()}, n - k0, self.ring)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise TruncationError("cannot raise the truncation order")
        return QSeries(self.coeffs, order, self.ring)

    def map_coeffs(self, fn, ring="same") -> "QSeries":
        ring = self.ring if ring == "same" else ring
        return QSeries({k: fn(v) for k, v in self.coeffs.items()}, self.order, ring)

    def flip_half(self) -> "QSeries":
        """q^(1/2) -> -q^(1/2), the action of tau -> tau + 1 on integer-weight data."""
        return QSeries({k: (-v if k % 2 else v) for k, v in self.coeffs.items()},
                       self.order, self.ring)

    def evaluate(self, q_half: complex) -> complex:
        """Numeric value at a given q^(1/2); rational coefficients only."""
        if self.ring is not None:
            raise TypeError("numeric evaluation needs rational coefficients")
        return sum((complex(float(v)) * q_half ** k for k, v in self.coeffs.items()), 0j)

    def to_json(self) -> dict[str, object]:
        out = {}
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            out[f"{k}/2"] = v.to_json() if isinstance(v, GradedPoly) else rat_str(v)
        return out

    @classmethod
    def from_json(cls, data: dict, order: int, ring: RingConfig | None = None) -> "QSeries":
        coeffs = {}
        for key, v in data.items():
            k = int(key.split("/")[0])
            coeffs[k] = GradedPoly.from_json(v, ring) if ring is not None else Fraction(v)
        return cls(coeffs, order, ring)


def qs_add(s: QSeries, t: QSeries) -> QSeries:
    return s + t


def qs_mul(s: QSeries, t: QSeries) -> QSeries:
    return s * t


def qs_pow(s: QSeries, k: int) -> QSeries:
    if k < 0:
        raise ValueError("qs_pow takes a non-negative exponent")
    return s ** k


def qs_invert(s: QSeries) -> QSeries:
    return s.invert()


def coefficient(s: QSeries, k: "HalfInt | int"):
    return s.coefficient(k)


class RootSeries:
    """sum_k c_k(q) a^k truncated at a^degree, with c_k rational q-series."""

    __slots__ = ("coeffs", "degree", "order")

    def __init__(self, coeffs: list[QSeries], degree: int, order: int):
        self.degree = degree
        self.order = order
        padded = list(coeffs[: degree + 1])
        padded += [QSeries({}, order)] * (degree + 1 - len(padded))
        self.coeffs = [c if c.order == order else QSeries(c.coeffs, min(c.order, order))
                       for c in padded]

    @classmethod
    def from_grid(cls, grid: dict[tuple[int, int], Fraction], degree: int, order: int):
        """Build from {(power of a, doubled power of q): value}."""
        rows: list[dict] = [{} for _ in range(degree + 1)]
        for (k, j), v in grid.items():
            if k <= degree and j <= order and v:
                rows[k][j] = rows[k].get(j, 0) + v
        return cls([QSeries(r, order) for r in rows], degree, order)

    @classmethod
    def from_taylor(cls, coeff, degree: int, order: int):
        """A q-independent series with Taylor coefficients coeff(k)."""
        return cls.from_grid({(k, 0): Fraction(coeff(k)) for k in range(degree + 1)},
                             degree, order)

    @classmethod
    def exp(cls, m, degree: int, order: int, q_power: int = 0, scale=1):
        """scale * e^(m a) * q^(q_power/2)."""
        m = Fraction(m)
        return cls.from_grid({(k, q_power): Fraction(scale) * m ** k / factorial(k)
                              for k in range(degree + 1)}, degree, order)

    @classmethod
    def constant(cls, s: "QSeries | Fraction | int", degree: int, order: int):
        if not isinstance(s, QSeries):
            s = QSeries.constant(s, order)
        return cls([s], degree, order)

    def coefficient(self, k: int) -> QSeries:
        if k > self.degree:
            raise TruncationError(f"a^{k} beyond degree {self.degree}")
        return self.coeffs[k]

    def q0_part(self) -> list[Fraction]:
        return [c.coeffs.get(0, Fraction(0)) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootSeries):
            return NotImplemented
        return (self.degree, self.order) == (other.degree, other.order) and all(
            a.coeffs == b.coeffs for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"RootSeries(degree={self.degree}, order={self.order})"

    def _shape(self, other: "RootSeries"):
        return min(self.degree, other.degree), min(self.order, other.order)

    def __add__(self, other) -> "RootSeries":
        if not isinstance(other, RootSeries):
            other = RootSeries.constant(other, self.degree, self.order)
        deg, order = self._shape(other)
        return RootSeries([self.coeffs[k] + other.coeffs[k] for k in range(deg + 1)], deg, order)

    __radd__ = __add__

    def __neg__(self) -> "RootSeries":
        return RootSeries([-c for c in self.coeffs], self.degree, self.order)

    def __sub__(self, other) -> "RootSeries":
        if not isinstance(other, RootSeries):
            other = RootSeries.constant(other, self.degree, self.order)
        return self + (-other)

    def __rsub__(self, other) -> "RootSeries":
        return (-self) + other

    def __mul__(self, other) -> "RootSeries":
        if _is_scalar(other):
            return RootSeries([c * other for c in self.coeffs], self.degree, self.order)
        if isinstance(other, QSeries):
            other = RootSeries.constant(other, self.degree, self.order)
        if not isinstance(other, RootSeries):
            return NotImplemented
        deg, order = self._shape(other)
        out = []
        for k in range(deg + 1):
            acc = QSeries({}, order)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return RootSeries(out, deg, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RootSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = RootSeries.constant(1, self.degree, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "RootSeries":
        """1/f; the a^0 coefficient must be an invertible q-series."""
        c0inv = self.coeffs[0].invert()
        if c0inv.order != self.order:
            raise ZeroDivisionError("a^0 coefficient must start at q^0")
        out = [c0inv]
        for k in range(1, self.degree + 1):
            acc = QSeries({}, self.order)
            for j in range(1, k + 1):
                if self.coeffs[j] and out[k - j]:
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(acc * c0inv))
        return RootSeries(out, self.degree, self.order)

    def __truediv__(self, other: "RootSeries") -> "RootSeries":
        return self * other.inverse()

    def derivative(self) -> "RootSeries":
        return RootSeries([self.coeffs[k] * k for k in range(1, self.degree + 1)],
                          self.degree - 1, self.order)

    def divide_by_variable(self) -> "RootSeries":
        if self.coeffs[0]:
            raise ArithmeticError("series has a nonzero a^0 term; not divisible by a")
        return RootSeries(self.coeffs[1:], self.degree - 1, self.order)

    def times_variable(self) -> "RootSeries":
        return RootSeries([QSeries({}, self.order)] + self.coeffs, self.degree + 1, self.order)

    def truncate(self, degree: int | None = None, order: int | None = None) -> "RootSeries":
        degree = self.degree if degree is None else degree
        order = self.order if order is None else order
        if degree > self.degree or order > self.order:
            raise TruncationError("cannot raise truncation")
        return RootSeries([QSeries(c.coeffs, order) for c in self.coeffs[: degree + 1]],
                          degree, order)

    def reflect(self) -> "RootSeries":
        """a -> -a."""
        return RootSeries([c * (-1) if k % 2 else c for k, c in enumerate(self.coeffs)],
                          self.degree, self.order)

    def parity(self) -> int | None:
        """+1 if even, -1 if odd, None if neither (or zero)."""
        even = all(not c for k, c in enumerate(self.coeffs) if k % 2)
        odd = all(not c for k, c in enumerate(self.coeffs) if k % 2 == 0)
        if even and not odd:
            return 1
        if odd and not even:
            return -1
        return None

    def evaluate(self, a: complex, q_half: complex) -> complex:
        return sum((c.evaluate(q_half) * a ** k for k, c in enumerate(self.coeffs)), 0j)

    def to_json(self) -> dict[str, dict]:
        return {f"a^{k}": c.to_json() for k, c in enumerate(self.coeffs) if c}


def q_half_of_tau(tau: complex) -> complex:
    """q^(1/2) = exp(pi i tau)."""
    return cmath.exp(1j * cmath.pi * tau)
