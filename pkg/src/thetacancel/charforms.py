"""Characteristic forms and the Q-form generating series.

Two independent routes lead to the same q-series of polynomials:

* the direct route expands ch of the bundles Theta_1, Theta_2, Theta_3
  factor by factor from ch(Lambda_t) and ch(S_t) of virtual bundles, and
  multiplies by the A-hat / L-hat / Euler-class prefactors;
* the theta route multiplies normalized theta ratios, computed from the
  triple-product sums in :mod:`thetacancel.theta`.

Conventions: the tangent bundle T_C M has roots +-a_j, xi0_C has +-c0 and
xi_C has +-c.  A reduced bundle E~ = E - dim E.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .graded_ring import (GradedPoly, RingConfig, ahat_root_coeffs, apply_series, embed,
                          lift_scalar_series, series_reciprocal, symmetric_product)
from .qseries import DEFAULT_ORDER, QSeries, RootSeries
from .theta import normalized_ratio

Q_KINDS = ("Q1", "Q2", "Q1p", "Q2p")


class HypothesisError(ValueError):
    """The dimension inequality required by a theorem is violated."""


# univariate Taylor data

def _conv(p: list, q: list, n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(p[: n + 1]):
        if a:
            for j, b in enumerate(q[: n + 1 - i]):
                out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def taylor(name: str, n: int) -> tuple[Fraction, ...]:
    """Coefficients through x^n of a few functions of x/2."""
    if name == "cosh_half":
        out = [Fraction(1, 2 ** k * factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(n + 1)]
    elif name == "sinh_half":
        out = [Fraction(1, 2 ** k * factorial(k)) if k % 2 else Fraction(0) for k in range(n + 1)]
    elif name == "exp":
        out = [Fraction(1, factorial(k)) for k in range(n + 1)]
    elif name == "ahat":
        out = ahat_root_coeffs(n)  # (x/2)/sinh(x/2)
    elif name == "lhat":
        out = _conv([2 * c for c in taylor("cosh_half", n)], list(taylor("ahat", n)), n)  # x/tanh(x/2)
    elif name == "sech_half":
        out = series_reciprocal(list(taylor("cosh_half", n)), n)
    elif name == "tanh_half":
        out = _conv(list(taylor("sinh_half", n)), list(taylor("sech_half", n)), n)
    else:
        raise ValueError(f"unknown series {name!r}")
    return tuple(out)


def ring_function(config: RingConfig, name: str, var: str) -> GradedPoly:
    """f(var) in the ring for one of the series known to :func:`taylor`."""
    coeffs = taylor(name, config.cutoff)
    return apply_series(lambda k: coeffs[k], GradedPoly.var(config, var))


def _roots(config: RingConfig, nroots: int | None) -> range:
    return range(1, (config.d if nroots is None else nroots) + 1)


def a_hat(config: RingConfig, nroots: int | None = None) -> GradedPoly:
    """prod_j (a_j/2)/sinh(a_j/2)."""
    out = GradedPoly.one(config)
    for j in _roots(config, nroots):
        out = out * ring_function(config, "ahat", f"a{j}")
    return out


def l_hat(config: RingConfig, nroots: int | None = None) -> GradedPoly:
    """prod_j a_j/tanh(a_j/2); the constant term is 2^d."""
    out = GradedPoly.one(config)
    for j in _roots(config, nroots):
        out = out * ring_function(config, "lhat", f"a{j}")
    return out


def ch_tangent(config: RingConfig, nroots: int | None = None, zero_roots: int = 0) -> GradedPoly:
    """ch(T_C M) = sum_j (e^{a_j} + e^{-a_j}) + (number of zero roots)."""
    out = GradedPoly.const(config, zero_roots)
    for j in _roots(config, nroots):
        out = out + ring_function(config, "exp", f"a{j}") + _exp_neg(config, f"a{j}")
    return out


def _exp_neg(config: RingConfig, var: str) -> GradedPoly:
    return ring_function(config, "exp", var).negate_var(var)


def euler_pair(config: RingConfig, var: str, shift: int = 2) -> GradedPoly:
    """e^v + e^-v - shift (shift 2 gives ch of the reduced rank-two bundle)."""
    return ring_function(config, "exp", var) + _exp_neg(config, var) - shift


# virtual bundles

ATOM_KINDS = ("tangent", "xi0", "xi", "trivial")
_ATOM_VAR = {"xi0": "c0", "xi": "c"}


@dataclass(frozen=True)
class Atom:
    kind: str
    rank: int = 0  # only used by trivial atoms

    def __post_init__(self):
        if self.kind not in ATOM_KINDS:
            raise ValueError(f"unknown atom {self.kind!r}")


TANGENT, XI0, XI = Atom("tangent"), Atom("xi0"), Atom("xi")


def trivial(rank: int) -> Atom:
    return Atom("trivial", rank)


@dataclass(frozen=True)
class VirtualBundle:
    """sum(positive) - sum(negative); ``reduced`` subtracts the rank."""

    positive: tuple[Atom, ...] = ()
    negative: tuple[Atom, ...] = ()
    reduced: bool = False

    @classmethod
    def combination(cls, reduced: bool = True, **mult: int) -> "VirtualBundle":
        pos, neg = [], []
        for kind, m in mult.items():
            atom = Atom(kind)
            (pos if m > 0 else neg).extend([atom] * abs(m))
        return cls(tuple(pos), tuple(neg), reduced)

    def multiplicities(self) -> Counter:
        c: Counter = Counter()
        for a in self.positive:
            c[a] += 1
        for a in self.negative:
            c[a] -= 1
        return c

    def rank(self, tangent_rank: int) -> int:
        if self.reduced:
            return 0
        total = 0
        for atom, m in self.multiplicities().items():
            r = {"tangent": tangent_rank, "xi0": 2, "xi": 2, "trivial": atom.rank}[atom.kind]
            total += m * r
        return total

    def __add__(self, other: "VirtualBundle") -> "VirtualBundle":
        if self.reduced != other.reduced:
            raise ValueError("cannot add reduced and unreduced bundles")
        return VirtualBundle(self.positive + other.positive, self.negative + other.negative,
                             self.reduced)


def _pair_factor(op: str, sign: int, key: int, reduced: bool, degree: int, order: int) -> RootSeries:
    """ch of op_t on a rank-two bundle with roots +-x, t = sign q^(key/2)."""
    one = RootSeries.constant(1, degree, order)
    if op == "lambda":
        num = (one + RootSeries.exp(1, degree, order, key, sign)) \
            * (one + RootSeries.exp(-1, degree, order, key, sign))
        if reduced:
            num = num * (QSeries.constant(1, order) + QSeries.monomial(key, sign, order)).invert() ** 2
        return num
    if op == "sym":
        den = (one + RootSeries.exp(1, degree, order, key, -sign)) \
            * (one + RootSeries.exp(-1, degree, order, key, -sign))
        try:
            out = den.inverse()
        except ZeroDivisionError as exc:
            raise ValueError(f"S_t with t = {sign} q^({key}/2) has a non-unit denominator") from exc
        if reduced:
            out = out * (QSeries.constant(1, order) + QSeries.monomial(key, -sign, order)) ** 2
        return out
    raise ValueError(f"unknown operation {op!r}")


def _trivial_factor(op: str, sign: int, key: int, rank: int, order: int) -> QSeries:
    t = QSeries.constant(1, order) + QSeries.monomial(key, sign if op == "lambda" else -sign, order)
    return t ** rank if op == "lambda" else t.invert() ** rank


Family = tuple[str, int, tuple[int, ...]]  # (op, sign, doubled q-exponents)


def _family_keys(start: int, order: int) -> tuple[int, ...]:
    """start, start+2, ... up to the order: q^n (start 2) or q^(n-1/2) (start 1)."""
    return tuple(range(start, order + 1, 2))


def ch_product(terms: list[tuple[Family, VirtualBundle]], config: RingConfig, order: int,
               nroots: int | None = None, zero_roots: int = 0) -> QSeries:
    """ch of a tensor product of Lambda_t / S_t factors of virtual bundles.

    Each term is ((op, sign, keys), bundle) and contributes
    prod_{k in keys} ch op_{sign q^(k/2)}(bundle).  Per-root factors are
    collected first so that each bundle atom is expanded once.
    """
    degree = config.cutoff
    per_atom: dict[str, RootSeries] = {}
    scalar = QSeries.constant(1, order)
    for (op, sign, keys), bundle in terms:
        for atom, m in bundle.multiplicities().items():
            if m == 0:
                continue
            if atom.kind == "trivial":
                if bundle.reduced:
                    continue
                for k in keys:
                    scalar = scalar * _trivial_factor(op, sign, k, atom.rank * abs(m), order) ** (1 if m > 0 else -1)
                continue
            f = RootSeries.constant(1, degree, order)
            for k in keys:
                f = f * _pair_factor(op, sign, k, bundle.reduced, degree, order)
            f = f ** m if m > 0 else f.inverse() ** (-m)
            key = atom.kind
            per_atom[key] = per_atom[key] * f if key in per_atom else f
        if zero_roots and not bundle.reduced:
            m = bundle.multiplicities().get(TANGENT, 0)
            if m:
                for k in keys:
                    t = QSeries.constant(1, order) + QSeries.monomial(k, sign if op == "lambda" else -sign, order)
                    t = t if op == "lambda" else t.invert()
                    scalar = scalar * (t ** (m * zero_roots) if m > 0 else t.invert() ** (-m * zero_roots))
    out = lift_scalar_series(scalar, config)
    if "tangent" in per_atom:
        out = out * symmetric_product(per_atom["tangent"], config, nroots)
    for kind, var in _ATOM_VAR.items():
        if kind in per_atom:
            out = out * embed(per_atom[kind], config, var)
    return out


def ch_virtual(bundle: VirtualBundle, t: tuple[int, int], config: RingConfig,
               order: int = DEFAULT_ORDER, op: str = "lambda", nroots: int | None = None,
               zero_roots: int = 0) -> QSeries:
    """ch(op_t(bundle)) for a single t = sign * q^(key/2), given as (sign, key)."""
    sign, key = t
    return ch_product([((op, sign, (key,)), bundle)], config, order, nroots, zero_roots)


def lambda_t(bundle: VirtualBundle, t: tuple[int, int], config: RingConfig,
             order: int = DEFAULT_ORDER, **kw) -> QSeries:
    return ch_virtual(bundle, t, config, order, "lambda", **kw)


def s_t(bundle: VirtualBundle, t: tuple[int, int], config: RingConfig,
        order: int = DEFAULT_ORDER, **kw) -> QSeries:
    return ch_virtual(bundle, t, config, order, "sym", **kw)


# theta bundles

VARIANTS = ("1", "2", "3", "1p", "2p")


@dataclass(frozen=True)
class ThetaBundleSpec:
    """Theta_1 / Theta_2 / Theta_3 and the primed variants built on T + xi.

    ``with_xi=False`` replaces the third argument xi_C by the trivial C^2.
    """

    variant: str
    m0: int
    with_xi: bool = True
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.m0 < 0:
            raise ValueError("m0 must be non-negative")
        if self.variant == "3" and self.with_xi:
            object.__setattr__(self, "with_xi", False)


def theta_bundle_terms(spec: ThetaBundleSpec, order: int) -> list[tuple[Family, VirtualBundle]]:
    whole, half = _family_keys(2, order), _family_keys(1, order)
    primed = spec.variant.endswith("p")
    base = {"tangent": 1, "xi0": -spec.m0}
    if primed:
        base["xi"] = 1
    first = VirtualBundle.combination(**base)
    if spec.variant == "3":
        return [(("sym", 1, whole), first), (("lambda", 1, half), first)]
    second = dict(base)
    if spec.with_xi:
        second["xi"] = second.get("xi", 0) - 2
    second_b = VirtualBundle.combination(**second)
    xi = VirtualBundle.combination(xi=1)
    if spec.variant in ("1", "1p"):
        terms = [(("sym", 1, whole), first), (("lambda", 1, whole), second_b)]
        if spec.with_xi:
            terms += [(("lambda", 1, half), xi), (("lambda", -1, half), xi)]
    else:
        terms = [(("sym", 1, whole), first), (("lambda", -1, half), second_b)]
        if spec.with_xi:
            terms += [(("lambda", 1, half), xi), (("lambda", 1, whole), xi)]
    return terms


def ch_theta_bundle(spec: ThetaBundleSpec, config: RingConfig, order: int = DEFAULT_ORDER,
                    nroots: int | None = None) -> QSeries:
    """ch(Theta) by direct multiplicative expansion; the q^(j/2) coefficient is ch of A_j / B_j."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return ch_product(theta_bundle_terms(spec, order), config, order, nroots)


# Q forms

def m0_even(d: int, n: int) -> int:
    """2n + (1 - (-1)^d)/2."""
    return 2 * n + d % 2


def m0_twisted(d: int, n: int) -> int:
    """2n + (1 + (-1)^d)/2."""
    return 2 * n + 1 - d % 2


def check_hypothesis(which: str, d: int, n: int):
    if n < 0 or d < 1:
        raise HypothesisError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    if which in ("Q1", "Q2", "even", "odd"):
        m0 = m0_even(d, n)
        if d - m0 <= 0:
            raise HypothesisError(f"d - (2n + (1-(-1)^d)/2) > 0 fails: {d} - {m0} = {d - m0}")
    else:
        m0 = m0_twisted(d, n)
        if d - 1 - m0 <= 0:
            raise HypothesisError(f"d - 1 - (2n + (1+(-1)^d)/2) > 0 fails: "
                                  f"{d} - 1 - {m0} = {d - 1 - m0}")


def _default_config(d: int, config: RingConfig | None) -> RingConfig:
    return RingConfig(d) if config is None else config


def _ratio(kind: int, role: str, degree: int, order: int) -> RootSeries:
    return normalized_ratio(kind, role, degree, order).series


def root_factor(kind: int, degree: int, order: int) -> RootSeries:
    """x theta'(0)/theta(x) * theta_k(x)/theta_k(0)."""
    return _ratio(0, "root-kernel", degree, order) * _ratio(kind, "ratio", degree, order)


def euler_factor(kind: int, degree: int, order: int) -> RootSeries:
    """pi i theta(u')/theta'(0) * theta_k(0)/theta_k(u')."""
    return _ratio(0, "euler-kernel", degree, order) * _ratio(kind, "inverse-ratio", degree, order)


def _xi_factor(which: str, degree: int, order: int) -> RootSeries:
    """The factor in u (c = 2 pi i u) of each Q form."""
    if which in ("Q1", "Q2"):
        k, others = (1, (3, 2)) if which == "Q1" else (2, (3, 1))
        out = _ratio(k, "inverse-ratio", degree, order) ** 2
        for j in others:
            out = out * _ratio(j, "ratio", degree, order)
        return out
    k, others = (1, (3, 2)) if which == "Q1p" else (2, (3, 1))
    up = degree + 1
    bracket = _ratio(k, "ratio", up, order) - _ratio(k, "inverse-ratio", up, order) \
        * _ratio(others[0], "ratio", up, order) * _ratio(others[1], "ratio", up, order)
    # theta'(0)/(pi i theta(u)) = 1/(c * euler-kernel-reduced)
    reduced = _ratio(0, "euler-kernel-reduced", degree, order)
    return bracket.divide_by_variable() * reduced.inverse()


def q_form(which: str, d: int, n: int, config: RingConfig | None = None,
           order: int = DEFAULT_ORDER, check: bool = True, trivial_xi: bool = False) -> QSeries:
    """Q1, Q2, Q1', Q2' assembled from normalized theta ratios."""
    if which not in Q_KINDS:
        raise ValueError(f"unknown Q form {which!r}")
    if check:
        check_hypothesis(which, d, n)
    config = _default_config(d, config)
    primed = which.endswith("p")
    if primed and trivial_xi:
        raise ValueError("the twisted forms need a nontrivial xi")
    m0 = m0_twisted(d, n) if primed else m0_even(d, n)
    kind = 1 if which.startswith("Q1") else 2
    deg = config.cutoff
    out = symmetric_product(root_factor(kind, deg, order), config, d)
    if m0:
        out = out * embed(euler_factor(kind, deg, order) ** m0, config, "c0")
    if not trivial_xi:
        out = out * embed(_xi_factor(which, deg, order), config, "c")
    scale = {"Q1": Fraction(2) ** d, "Q2": 1, "Q1p": Fraction(2) ** d, "Q2p": Fraction(1, 2)}[which]
    return out * scale


def q_form_direct(which: str, d: int, n: int, config: RingConfig | None = None,
                  order: int = DEFAULT_ORDER, check: bool = True, trivial_xi: bool = False) -> QSeries:
    """The same Q forms from characteristic forms times ch of the Theta bundles."""
    if which not in Q_KINDS:
        raise ValueError(f"unknown Q form {which!r}")
    if check:
        check_hypothesis(which, d, n)
    config = _default_config(d, config)
    primed = which.endswith("p")
    if primed and trivial_xi:
        raise ValueError("the twisted forms need a nontrivial xi")
    m0 = m0_twisted(d, n) if primed else m0_even(d, n)
    if not primed:
        variant = "1" if which == "Q1" else "2"
        ch = ch_theta_bundle(ThetaBundleSpec(variant, m0, not trivial_xi), config, order, d)
        if which == "Q1":
            pre = l_hat(config, d) * ring_function(config, "tanh_half", "c0") ** m0
            if not trivial_xi:
                pre = pre * ring_function(config, "sech_half", "c") ** 2
        else:
            pre = a_hat(config, d) * ring_function(config, "sinh_half", "c0") ** m0
            if not trivial_xi:
                pre = pre * ring_function(config, "cosh_half", "c")
        return ch * pre
    up = config.with_cutoff(config.cutoff + 1)
    variant = "1p" if which == "Q1p" else "2p"
    plain = ch_theta_bundle(ThetaBundleSpec(variant, m0, False), up, order, d)
    twisted = ch_theta_bundle(ThetaBundleSpec(variant, m0, True), up, order, d)
    if which == "Q1p":
        bracket = plain - twisted * ring_function(up, "sech_half", "c") ** 2
        pre = l_hat(up, d) * ring_function(up, "tanh_half", "c0") ** m0 * ring_function(up, "lhat", "c")
    else:
        bracket = plain - twisted * ring_function(up, "cosh_half", "c")
        pre = a_hat(up, d) * ring_function(up, "sinh_half", "c0") ** m0 * ring_function(up, "ahat", "c")
    full = bracket * pre
    # the bracket vanishes at c = 0, so the division by c is exact
    return full.map_coeffs(lambda p: p.divide_by_var("c").with_config(config), ring=config)


def q_form_series_top(series: QSeries) -> QSeries:
    """Apply top_component coefficientwise."""
    return series.map_coeffs(lambda p: p.homogeneous(p.config.d))


# closed forms that appear on the two sides of the cancellation formulas

def even_base(d: int, n: int, config: RingConfig | None = None, trivial_xi: bool = False) -> GradedPoly:
    """A-hat cosh(c/2) sinh(c0/2)^m0."""
    config = _default_config(d, config)
    out = a_hat(config, d) * ring_function(config, "sinh_half", "c0") ** m0_even(d, n)
    return out if trivial_xi else out * ring_function(config, "cosh_half", "c")


def even_lhs(d: int, n: int, config: RingConfig | None = None, trivial_xi: bool = False) -> GradedPoly:
    """L-hat / cosh^2(c/2) * tanh(c0/2)^m0."""
    config = _default_config(d, config)
    out = l_hat(config, d) * ring_function(config, "tanh_half", "c0") ** m0_even(d, n)
    return out if trivial_xi else out * ring_function(config, "sech_half", "c") ** 2


def twisted_lhs(d: int, n: int, config: RingConfig | None = None) -> GradedPoly:
    """L-hat tanh(c/2) tanh(c0/2)^m0'."""
    config = _default_config(d, config)
    return l_hat(config, d) * ring_function(config, "tanh_half", "c") \
        * ring_function(config, "tanh_half", "c0") ** m0_twisted(d, n)


def twisted_base_times(d: int, n: int, factor_up, config: RingConfig | None = None) -> GradedPoly:
    """A-hat sinh(c0/2)^m0' / (2 sinh(c/2)) * Y, for Y given in the ring with cutoff d+1.

    ``factor_up`` maps the raised ring to Y; Y must vanish at c = 0.
    """
    config = _default_config(d, config)
    up = config.with_cutoff(config.cutoff + 1)
    full = a_hat(up, d) * ring_function(up, "sinh_half", "c0") ** m0_twisted(d, n) \
        * ring_function(up, "ahat", "c") * factor_up(up)
    return full.divide_by_var("c").with_config(config)
