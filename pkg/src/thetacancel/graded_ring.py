"""Truncated graded polynomial ring over the rationals.

The ring is Q[a1, ..., ad, c, c0] (optionally with one extra generator ``s``)
with every monomial of total degree above a cutoff discarded.  Each ``aj``,
``c`` and ``c0`` has degree one: they stand for the normalized Chern roots
2*pi*i*x_j and the normalized Euler forms, i.e. cohomological 2-forms, so the
internal degree d corresponds to form degree 2d.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from operator import add, mul
from typing import TYPE_CHECKING

from .exact_arith import rat_str

if TYPE_CHECKING:
    from .qseries import QSeries, RootSeries


@dataclass(frozen=True)
class RingConfig:
    """Shape of the ring: ``d`` root variables, degree cutoff, optional ``s``."""

    d: int
    cutoff: int | None = None
    use_cs_generator: bool = False
    s_degree: int = 0

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be non-negative")
        if self.cutoff is None:
            object.__setattr__(self, "cutoff", self.d)
        if self.cutoff < 0:
            raise ValueError("cutoff must be non-negative")

    @property
    def names(self) -> tuple[str, ...]:
        base = tuple(f"a{j}" for j in range(1, self.d + 1)) + ("c", "c0")
        return base + ("s",) if self.use_cs_generator else base

    @property
    def nvars(self) -> int:
        return self.d + 2 + (1 if self.use_cs_generator else 0)

    @property
    def weights(self) -> tuple[int, ...]:
        w = (1,) * (self.d + 2)
        return w + (self.s_degree,) if self.use_cs_generator else w

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring with d={self.d}") from None

    def degree(self, exp: tuple[int, ...]) -> int:
        return sum(map(mul, exp, self.weights))

    def with_cutoff(self, cutoff: int) -> "RingConfig":
        return RingConfig(self.d, cutoff, self.use_cs_generator, self.s_degree)


class ConfigMismatch(ValueError):
    pass


class GradedPoly:
    """Element of the truncated ring; terms map exponent tuples to Fractions."""

    __slots__ = ("terms", "config")

    def __init__(self, terms: dict[tuple[int, ...], Fraction] | None, config: RingConfig,
                 *, trusted: bool = False):
        self.config = config
        if trusted:
            self.terms = terms
            return
        cut = config.cutoff
        clean = {}
        for e, v in (terms or {}).items():
            if len(e) != config.nvars:
                raise ValueError(f"exponent {e} does not fit ring {config.names}")
            if v and config.degree(e) <= cut:
                clean[tuple(e)] = Fraction(v)
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, config: RingConfig) -> "GradedPoly":
        return cls({}, config, trusted=True)

    @classmethod
    def const(cls, config: RingConfig, value) -> "GradedPoly":
        value = Fraction(value)
        if not value:
            return cls.zero(config)
        return cls({(0,) * config.nvars: value}, config, trusted=True)

    @classmethod
    def one(cls, config: RingConfig) -> "GradedPoly":
        return cls.const(config, 1)

    @classmethod
    def var(cls, config: RingConfig, name: str, power: int = 1) -> "GradedPoly":
        e = [0] * config.nvars
        e[config.index(name)] = power
        return cls({tuple(e): Fraction(1)}, config)

    @classmethod
    def univariate(cls, config: RingConfig, name: str, coeffs: Sequence) -> "GradedPoly":
        i = config.index(name)
        terms = {}
        for k, v in enumerate(coeffs):
            e = [0] * config.nvars
            e[i] = k
            terms[tuple(e)] = v
        return cls(terms, config)

    # basic protocol

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.const(self.config, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.config == other.config and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedPoly({self.to_string()})"

    def _check(self, other: "GradedPoly"):
        if self.config != other.config:
            raise ConfigMismatch(f"ring mismatch: {self.config} vs {other.config}")

    def _lift(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return GradedPoly.const(self.config, other)
        return NotImplemented

    # arithmetic

    def __add__(self, other) -> "GradedPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, v in other.terms.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return GradedPoly(out, self.config, trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly({e: -v for e, v in self.terms.items()}, self.config, trusted=True)

    def __sub__(self, other) -> "GradedPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "GradedPoly":
        return (-self) + other

    def scale(self, k) -> "GradedPoly":
        k = Fraction(k)
        if not k:
            return GradedPoly.zero(self.config)
        return GradedPoly({e: v * k for e, v in self.terms.items()}, self.config, trusted=True)

    def _by_degree(self) -> list[tuple[int, list]]:
        buckets: dict[int, list] = {}
        deg = self.config.degree
        for e, v in self.terms.items():
            buckets.setdefault(deg(e), []).append((e, v))
        return sorted(buckets.items())

    def __mul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return GradedPoly.zero(self.config)
        cut = self.config.cutoff
        deg = self.config.degree
        right = other._by_degree()
        out: dict[tuple[int, ...], Fraction] = {}
        get = out.get
        for e1, v1 in self.terms.items():
            room = cut - deg(e1)
            for d2, items in right:
                if d2 > room:
                    break
                for e2, v2 in items:
                    e = tuple(map(add, e1, e2))
                    out[e] = get(e, 0) + v1 * v2
        return GradedPoly({e: v for e, v in out.items() if v}, self.config, trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GradedPoly":
        if k < 0:
            return self.inverse() ** (-k)
        result = GradedPoly.one(self.config)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.config.nvars, Fraction(0))

    def inverse(self) -> "GradedPoly":
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("polynomial without constant term is not a unit")
        if any(self.config.degree(e) == 0 for e in self.terms if any(e)):
            raise ValueError("inverse undefined when degree-0 generators are present")
        nil = (self - c0).scale(-1 / c0)
        # 1/(c0(1 - nil')) with nil' nilpotent
        return apply_series([Fraction(1)] * (self.config.cutoff + 1), nil).scale(1 / c0)

    # structure

    def degree_parts(self) -> dict[int, "GradedPoly"]:
        return {d: GradedPoly(dict(items), self.config, trusted=True)
                for d, items in self._by_degree()}

    def homogeneous(self, k: int) -> "GradedPoly":
        deg = self.config.degree
        return GradedPoly({e: v for e, v in self.terms.items() if deg(e) == k},
                          self.config, trusted=True)

    def substitute_zero(self, name: str) -> "GradedPoly":
        i = self.config.index(name)
        return GradedPoly({e: v for e, v in self.terms.items() if e[i] == 0},
                          self.config, trusted=True)

    def divide_by_var(self, name: str) -> "GradedPoly":
        """Exact division by one generator; every term must contain it."""
        i = self.config.index(name)
        out = {}
        for e, v in self.terms.items():
            if e[i] == 0:
                raise ArithmeticError(f"{self.to_string()} is not divisible by {name}")
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = v
        return GradedPoly(out, self.config, trusted=True)

    def permute_roots(self, perm: Sequence[int]) -> "GradedPoly":
        """Rename root aj -> a_{perm[j]} (0-based permutation of range(d))."""
        d = self.config.d
        out = {}
        for e, v in self.terms.items():
            e2 = list(e)
            for j in range(d):
                e2[perm[j]] = e[j]
            out[tuple(e2)] = v
        return GradedPoly(out, self.config, trusted=True)

    def negate_var(self, name: str) -> "GradedPoly":
        i = self.config.index(name)
        return GradedPoly({e: (-v if e[i] % 2 else v) for e, v in self.terms.items()},
                          self.config, trusted=True)

    def with_config(self, config: RingConfig) -> "GradedPoly":
        """Re-home into a ring with the same generators and another cutoff."""
        if config.names != self.config.names or config.weights != self.config.weights:
            raise ConfigMismatch("generators differ")
        return GradedPoly(self.terms, config)

    # serialization

    def monomial_string(self, e: tuple[int, ...]) -> str:
        parts = []
        for name, k in zip(self.config.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts) or "1"

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        deg = self.config.degree
        return sorted(self.terms.items(), key=lambda t: (deg(t[0]), tuple(-x for x in t[0])))

    def to_json(self) -> dict[str, str]:
        return {self.monomial_string(e): rat_str(v) for e, v in self.sorted_terms()}

    @classmethod
    def from_json(cls, data: dict[str, str], config: RingConfig) -> "GradedPoly":
        terms = {}
        for mono, val in data.items():
            e = [0] * config.nvars
            if mono != "1":
                for part in mono.split("*"):
                    name, _, k = part.partition("^")
                    e[config.index(name)] += int(k or 1)
            terms[tuple(e)] = Fraction(val)
        return cls(terms, config)

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, v in self.sorted_terms():
            mono = self.monomial_string(e)
            out.append(str(v) if mono == "1" else (mono if v == 1 else f"{v}*{mono}"))
        return " + ".join(out)


def poly_add(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    p._check(q)
    return p + q


def poly_mul(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    p._check(q)
    return p * q


def poly_scale(p: GradedPoly, k) -> GradedPoly:
    return p.scale(k)


def top_component(p: GradedPoly) -> GradedPoly:
    """The homogeneous part of internal degree d (form degree 2d)."""
    return p.homogeneous(p.config.d)


def apply_series(f: Sequence | Callable[[int], Fraction], p: GradedPoly) -> GradedPoly:
    """Compose a univariate power series with a nilpotent element by Horner."""
    if p.constant_term():
        raise ValueError("apply_series needs a polynomial without constant term")
    if any(p.config.degree(e) == 0 for e in p.terms):
        raise ValueError("argument has degree-0 terms; composition would not truncate")
    n = p.config.cutoff
    coeff = f if callable(f) else (lambda k: f[k] if k < len(f) else 0)
    result = GradedPoly.const(p.config, coeff(n))
    for k in range(n - 1, -1, -1):
        result = result * p + coeff(k)
    return result


# Taylor coefficient callbacks used across the package

def exp_coeff(k: int) -> Fraction:
    return Fraction(1, factorial(k))


def cosh_coeff(k: int) -> Fraction:
    return Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0)


def sinh_coeff(k: int) -> Fraction:
    return Fraction(1, factorial(k)) if k % 2 else Fraction(0)


def series_reciprocal(coeffs: Sequence[Fraction], n: int) -> list[Fraction]:
    """Coefficients of 1/f through x^n, for f with f(0) != 0."""
    b = [Fraction(0)] * (n + 1)
    b[0] = 1 / Fraction(coeffs[0])
    for k in range(1, n + 1):
        s = sum((coeffs[j] * b[k - j] for j in range(1, min(k, len(coeffs) - 1) + 1)),
                Fraction(0))
        b[k] = -s * b[0]
    return b


def half_angle(coeffs: Callable[[int], Fraction], n: int) -> list[Fraction]:
    """Coefficients of f(x/2) through x^n."""
    return [coeffs(k) / 2 ** k for k in range(n + 1)]


def ahat_root_coeffs(n: int) -> list[Fraction]:
    """(x/2)/sinh(x/2) through x^n."""
    # sinh(x/2)/(x/2) = sum x^(2k)/(4^k (2k+1)!)
    shifted = [Fraction(1, 2 ** k * factorial(k + 1)) if k % 2 == 0 else Fraction(0)
               for k in range(n + 1)]
    return series_reciprocal(shifted, n)


def symmetric_product(f: "RootSeries", config: RingConfig,
                      nroots: int | None = None) -> "QSeries":
    """prod_j f(a_j) as a q-series of symmetric polynomials in the roots.

    With ``nroots`` only a_1 .. a_nroots take part; the remaining root
    variables are left free.
    """
    from .qseries import QSeries

    if not f.coefficient(0):
        raise ValueError("symmetric_product needs f(0) != 0")
    d = config.d if nroots is None else nroots
    if not 0 <= d <= config.d:
        raise ValueError(f"nroots={nroots} outside 0..{config.d}")
    cut = config.cutoff
    order = f.order
    nz = [k for k in range(1, min(cut, f.degree) + 1) if f.coefficient(k)]
    f0_pows = [QSeries.constant(Fraction(1), order)]
    for _ in range(d):
        f0_pows.append(f0_pows[-1] * f.coefficient(0))

    acc: dict[int, dict[tuple[int, ...], Fraction]] = {}
    extra = [0] * (config.nvars - d)
    if d == 0:
        return lift_scalar_series(QSeries.constant(1, order), config)

    def multisets(start: int, budget: int, room: int):
        yield ()
        if room == 0:
            return
        for k in nz:
            if k < start or k > budget:
                continue
            for rest in multisets(k, budget - k, room - 1):
                yield (k,) + rest

    for parts in multisets(0, cut, d):
        series = f0_pows[d - len(parts)]
        for k in parts:
            series = series * f.coefficient(k)
        if not series.coeffs:
            continue
        padded = parts + (0,) * (d - len(parts))
        for arrangement in set(itertools.permutations(padded)):
            e = tuple(arrangement) + tuple(extra)
            for k2, v in series.coeffs.items():
                acc.setdefault(k2, {})[e] = v
    coeffs = {k2: GradedPoly(terms, config) for k2, terms in acc.items()}
    return QSeries(coeffs, order, ring=config)


def embed(f: "RootSeries", config: RingConfig, name: str) -> "QSeries":
    """f(v) for a single generator v, as a q-series of polynomials."""
    from .qseries import QSeries

    i = config.index(name)
    acc: dict[int, dict] = {}
    top = config.cutoff
    for k in range(min(f.degree, top) + 1):
        e = [0] * config.nvars
        e[i] = k
        e = tuple(e)
        for k2, v in f.coefficient(k).coeffs.items():
            acc.setdefault(k2, {})[e] = v
    return QSeries({k2: GradedPoly(t, config) for k2, t in acc.items()}, f.order, ring=config)


def root_sum(f: "RootSeries", config: RingConfig, roots: Iterable[int] | None = None) -> "QSeries":
    """sum_j f(a_j) over the root variables."""
    from .qseries import QSeries

    total = QSeries({}, f.order, ring=config)
    for j in (range(1, config.d + 1) if roots is None else roots):
        total = total + embed(f, config, f"a{j}")
    return total


def lift_scalar_series(s: "QSeries", config: RingConfig) -> "QSeries":
    from .qseries import QSeries

    return QSeries({k: GradedPoly.const(config, v) for k, v in s.coeffs.items()},
                   s.order, ring=config)
