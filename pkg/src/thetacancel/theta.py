"""Formal q-expansions of the four Jacobi theta functions.

Labels follow the convention

    theta(v)  = 2 q^(1/8) sin(pi v)  prod (1-q^j)(1-e^{2 pi i v} q^j)(1-e^{-2 pi i v} q^j)
    theta1(v) = 2 q^(1/8) cos(pi v)  prod (1-q^j)(1+e^{2 pi i v} q^j)(1+e^{-2 pi i v} q^j)
    theta2(v) =                      prod (1-q^j)(1-e^{2 pi i v} q^(j-1/2))(1-e^{-2 pi i v} q^(j-1/2))
    theta3(v) =                      prod (1-q^j)(1+e^{2 pi i v} q^(j-1/2))(1+e^{-2 pi i v} q^(j-1/2))

so ``theta`` is the odd function and ``theta1`` carries the cosine; in the
classical numbering these are theta_1, theta_2, theta_4 and theta_3.

Everything is written in the normalized variable a = 2 pi i v.  Then
sin(pi v) = -i sinh(a/2), every ratio below has rational q-series
coefficients, and the prefactors 2 q^(1/8), 2 pi q^(1/8) and the powers of
pi i cancel between numerator and denominator.  The ``normalization`` field
of :class:`ThetaExpansion` records which of them were stripped.

Two independent routes are available for each object: the Jacobi triple
product written as a sum (``form="sum"``, the default used to assemble the
characteristic forms) and the product formula itself (``form="product"``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt

from .qseries import DEFAULT_ORDER, QSeries, RootSeries

KINDS = ("theta", "theta1", "theta2", "theta3")
ROLES = ("root-kernel", "ratio", "inverse-ratio", "euler-kernel", "euler-kernel-reduced")

_KIND_ALIASES = {"0": "theta", "1": "theta1", "2": "theta2", "3": "theta3",
                 0: "theta", 1: "theta1", 2: "theta2", 3: "theta3"}


def _kind(kind) -> str:
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown theta kind {kind!r}")
    return kind


@dataclass(frozen=True)
class ThetaExpansion:
    kind: str
    role: str
    series: RootSeries
    normalization: str

    @property
    def degree(self) -> int:
        return self.series.degree

    @property
    def order(self) -> int:
        return self.series.order

    def q0(self) -> list[Fraction]:
        return self.series.q0_part()


@dataclass(frozen=True)
class ModularPair:
    level: int
    delta: QSeries
    epsilon: QSeries


# theta constants and theta'(0), product route

def _prod(factors, order: int) -> QSeries:
    out = QSeries.constant(1, order)
    for f in factors:
        out = out * f
    return out


def _one_plus(k: int, sign: int, order: int) -> QSeries:
    """1 + sign * q^(k/2)."""
    return QSeries({0: Fraction(1), k: Fraction(sign)}, order)


@lru_cache(maxsize=None)
def eta_cubed(order: int = DEFAULT_ORDER) -> QSeries:
    """prod (1-q^j)^3, i.e. theta'(0) / (2 pi q^(1/8))."""
    return _prod((_one_plus(2 * j, -1, order) ** 3 for j in range(1, order // 2 + 1)), order)


@lru_cache(maxsize=None)
def theta_constant(kind, order: int = DEFAULT_ORDER) -> QSeries:
    """theta_k(0, tau) from the product formula.

    For theta1 the prefactor 2 q^(1/8) is stripped, so the result starts at 1.
    theta(0, tau) vanishes identically and is rejected; use :func:`eta_cubed`
    for theta'(0).
    """
    kind = _kind(kind)
    if kind == "theta":
        raise ValueError("theta(0, tau) = 0; only theta'(0, tau) is meaningful")
    full = [_one_plus(2 * j, -1, order) for j in range(1, order // 2 + 1)]
    if kind == "theta1":
        full += [_one_plus(2 * j, 1, order) ** 2 for j in range(1, order // 2 + 1)]
    else:
        sign = -1 if kind == "theta2" else 1
        full += [_one_plus(2 * j - 1, sign, order) ** 2 for j in range(1, (order + 1) // 2 + 1)]
    return _prod(full, order)


@lru_cache(maxsize=None)
def theta_constant_sum(kind, order: int = DEFAULT_ORDER) -> QSeries:
    """Same constants from the triple-product sums (theta1 again without 2 q^(1/8))."""
    kind = _kind(kind)
    if kind == "theta":
        raise ValueError("theta(0, tau) = 0; only theta'(0, tau) is meaningful")
    coeffs: dict[int, Fraction] = {}
    if kind == "theta1":
        n = 0
        while n * (n + 1) <= order:
            coeffs[n * (n + 1)] = Fraction(1)
            n += 1
    else:
        sign = -1 if kind == "theta2" else 1
        coeffs[0] = Fraction(1)
        for n in range(1, isqrt(order) + 1):
            coeffs[n * n] = Fraction(2 * sign ** n)
    return QSeries(coeffs, order)


@lru_cache(maxsize=None)
def theta_prime_sum(order: int = DEFAULT_ORDER) -> QSeries:
    """sum (-1)^n (2n+1) q^(n(n+1)/2), the sum form of theta'(0)/(2 pi q^(1/8))."""
    coeffs = {}
    n = 0
    while n * (n + 1) <= order:
        coeffs[n * (n + 1)] = Fraction((-1) ** n * (2 * n + 1))
        n += 1
    return QSeries(coeffs, order)


# theta functions as series in the normalized root variable

@lru_cache(maxsize=None)
def theta_series(kind, degree: int, order: int = DEFAULT_ORDER, form: str = "sum") -> RootSeries:
    """theta_k(a) with the prefactor 2 q^(1/8) (and the factor -i for theta) removed.

    theta  -> sinh(a/2) prod (1-q^j)(1-e^a q^j)(1-e^-a q^j)
    theta1 -> cosh(a/2) prod (1-q^j)(1+e^a q^j)(1+e^-a q^j)
    theta2, theta3 as in the module docstring with e^{2 pi i v} = e^a.
    """
    kind = _kind(kind)
    if form == "sum":
        return _theta_sum(kind, degree, order)
    if form == "product":
        return _theta_product(kind, degree, order)
    raise ValueError(f"unknown form {form!r}")


def _theta_sum(kind: str, degree: int, order: int) -> RootSeries:
    grid: dict[tuple[int, int], Fraction] = {}
    if kind in ("theta", "theta1"):
        # sum_n (+-1)^n q^(n(n+1)/2) sinh or cosh((2n+1) a / 2)
        parity = 1 if kind == "theta" else 0
        n = 0
        while n * (n + 1) <= order:
            sign = (-1) ** n if kind == "theta" else 1
            half = Fraction(2 * n + 1, 2)
            for k in range(parity, degree + 1, 2):
                grid[(k, n * (n + 1))] = sign * half ** k / factorial(k)
            n += 1
    else:
        # sum_{n in Z} (+-1)^n q^(n^2/2) e^(n a)
        base = -1 if kind == "theta2" else 1
        grid[(0, 0)] = Fraction(1)
        for n in range(1, isqrt(order) + 1):
            for k in range(0, degree + 1, 2):
                grid[(k, n * n)] = Fraction(2 * base ** n * n ** k, factorial(k))
    return RootSeries.from_grid(grid, degree, order)


def _theta_product(kind: str, degree: int, order: int) -> RootSeries:
    if kind == "theta":
        out = RootSeries.from_taylor(lambda k: Fraction(1, 2 ** k * factorial(k)) if k % 2 else 0,
                                     degree, order)
    elif kind == "theta1":
        out = RootSeries.from_taylor(lambda k: 0 if k % 2 else Fraction(1, 2 ** k * factorial(k)),
                                     degree, order)
    else:
        out = RootSeries.constant(1, degree, order)
    sign = -1 if kind in ("theta", "theta2") else 1
    integral = kind in ("theta", "theta1")
    for j in range(1, order // 2 + 1):
        out = out * QSeries({0: Fraction(1), 2 * j: Fraction(-1)}, order)
    for j in range(1, order + 1):
        k = 2 * j if integral else 2 * j - 1
        if k > order:
            break
        for m in (1, -1):
            out = out * (RootSeries.constant(1, degree, order)
                         + RootSeries.exp(m, degree, order, q_power=k, scale=sign))
    return out


def _at_zero(s: RootSeries) -> QSeries:
    return s.coefficient(0)


@lru_cache(maxsize=None)
def normalized_ratio(kind, role: str, degree: int, order: int = DEFAULT_ORDER,
                     form: str = "sum") -> ThetaExpansion:
    """Normalized theta ratios as power series in a = 2 pi i x.

    root-kernel   x theta'(0)/theta(x)          = (a/2)/sinh(a/2) * ...   (kind ignored)
    ratio         theta_k(x)/theta_k(0)
    inverse-ratio theta_k(0)/theta_k(x)
    euler-kernel  pi i theta(x)/theta'(0)       = sinh(a/2) * ...         (kind ignored)
    euler-kernel-reduced   the euler kernel divided by a
    """
    kind = _kind(kind)
    if role not in ROLES:
        raise ValueError(f"unknown role {role!r}")
    if role in ("root-kernel", "euler-kernel", "euler-kernel-reduced"):
        if form == "sum":
            dprime = theta_prime_sum(order)
        else:
            dprime = eta_cubed(order)
        s_red = theta_series("theta", degree + 1, order, form).divide_by_variable()
        if role == "root-kernel":
            series = RootSeries.constant(dprime, degree, order) * s_red.inverse() * Fraction(1, 2)
            note = "x theta'(0)/theta(x): 2 pi q^(1/8) over 2 q^(1/8), pi x/(-i) = a/2"
        elif role == "euler-kernel":
            full = theta_series("theta", degree, order, form)
            series = full * dprime.invert()
            note = "pi i theta(x)/theta'(0): 2 q^(1/8) (-i) pi i over 2 pi q^(1/8) = 1"
        else:
            series = s_red * dprime.invert()
            note = "pi i theta(x)/(a theta'(0))"
        return ThetaExpansion("theta", role, series, note)
    if kind == "theta":
        raise ValueError("ratios of theta itself are singular at 0; use a kernel role")
    full = theta_series(kind, degree, order, form)
    if role == "ratio":
        series = full * _at_zero(full).invert()
    else:
        series = full.inverse() * _at_zero(full)
    note = "2 q^(1/8) cancels" if kind == "theta1" else "no prefactor"
    return ThetaExpansion(kind, role, series, note)


@lru_cache(maxsize=None)
def log_derivative_kernel(kind, degree: int, order: int = DEFAULT_ORDER,
                          form: str = "sum") -> ThetaExpansion:
    """1/a - d/da log theta(a) + d/da log theta_k(a) in the normalized variable.

    The pole of the first two terms cancels: with theta(a) = a S(a),
    1/a - theta_a/theta = -S'(a)/S(a).  The true kernel in v is 2 pi i times
    this series.
    """
    kind = _kind(kind)
    if kind == "theta":
        raise ValueError("kernel kind must be theta1, theta2 or theta3")
    s_red = theta_series("theta", degree + 2, order, form).divide_by_variable()
    tk = theta_series(kind, degree + 1, order, form)
    series = tk.derivative() * tk.inverse().truncate(degree) - s_red.derivative() * s_red.inverse().truncate(degree)
    return ThetaExpansion(kind, "log-derivative", series, "common factor 2 pi i dropped")


@lru_cache(maxsize=None)
def log_derivative_kernel_lambert(kind, degree: int, order: int = DEFAULT_ORDER) -> RootSeries:
    """The same kernel from Lambert-type sums sum_j e^a q^j / (1 - e^a q^j)."""
    kind = _kind(kind)
    # q^0 part: 1/a - coth(a/2)/2 (+ tanh(a/2)/2 for theta1)
    out = RootSeries.from_taylor(_one_over_a_minus_half_coth, degree, order)
    if kind == "theta1":
        out = out + RootSeries.from_taylor(_half_tanh_half, degree, order)
    # -d/da log prod (1 - e^{+-a} q^j)
    out = out + _lambert(degree, order, step_keys=[2 * j for j in range(1, order // 2 + 1)],
                         sign=-1, factor=-1)
    if kind == "theta1":
        keys = [2 * j for j in range(1, order // 2 + 1)]
        out = out + _lambert(degree, order, keys, sign=1, factor=1)
    elif kind in ("theta2", "theta3"):
        keys = [2 * j - 1 for j in range(1, (order + 1) // 2 + 1)]
        out = out + _lambert(degree, order, keys, sign=-1 if kind == "theta2" else 1, factor=1)
    return out


def _lambert(degree: int, order: int, step_keys, sign: int, factor: int) -> RootSeries:
    """factor * d/da sum_k log(1 + sign e^a q^k) (1 + sign e^-a q^k)."""
    # log(1 + s x) = -sum_m (-s)^m x^m / m, so the derivative in a of
    # log(1 + s e^a t) + log(1 + s e^-a t) is -sum_m (-s)^m t^m (e^{ma} - e^{-ma}).
    grid: dict[tuple[int, int], Fraction] = {}
    for k in step_keys:
        m = 1
        while m * k <= order:
            w = -factor * Fraction((-sign) ** m)
            for p in range(1, degree + 1, 2):
                grid[(p, m * k)] = grid.get((p, m * k), 0) + w * 2 * Fraction(m) ** p / factorial(p)
            m += 1
    return RootSeries.from_grid(grid, degree, order)


def _bernoulli(n: int) -> Fraction:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(Fraction(factorial(m + 1), factorial(k) * factorial(m + 1 - k)) * b[k]
                      for k in range(m)) / (m + 1))
    return b[n]


def _one_over_a_minus_half_coth(k: int) -> Fraction:
    # (a/2)coth(a/2) = sum B_{2m} a^{2m}/(2m)!, so 1/a - coth(a/2)/2 = -sum_{m>=1} B_{2m} a^{2m-1}/(2m)!
    if k % 2 == 0:
        return Fraction(0)
    return -_bernoulli(k + 1) / factorial(k + 1)


def _half_tanh_half(k: int) -> Fraction:
    # tanh(x) = sum 2^{2m}(2^{2m}-1) B_{2m} x^{2m-1}/(2m)!, here x = a/2 and an extra 1/2
    if k % 2 == 0:
        return Fraction(0)
    m2 = k + 1
    return Fraction(2 ** m2 * (2 ** m2 - 1)) * _bernoulli(m2) / factorial(m2) / 2 ** k / 2


@lru_cache(maxsize=None)
def modular_pair(level: int, order: int = DEFAULT_ORDER) -> ModularPair:
    """delta_i, epsilon_i from fourth powers of the theta constants.

    theta1(0)^4 = 16 q^(1/2) t1^4 where t1 is the stripped constant.
    """
    t1 = theta_constant("theta1", order) ** 4 * QSeries.monomial(1, 16, order)
    t2 = theta_constant("theta2", order) ** 4
    t3 = theta_constant("theta3", order) ** 4
    if level == 1:
        return ModularPair(1, (t2 + t3) * Fraction(1, 8), t2 * t3 * Fraction(1, 16))
    if level == 2:
        return ModularPair(2, (t1 + t3) * Fraction(-1, 8), t1 * t3 * Fraction(1, 16))
    if level == 3:
        return ModularPair(3, (t1 - t2) * Fraction(1, 8), t1 * t2 * Fraction(-1, 16))
    raise ValueError(f"level must be 1, 2 or 3, got {level}")


def jacobi_identity_check(order: int = DEFAULT_ORDER, perturb: dict | None = None) -> dict:
    """theta'(0) = pi theta1(0) theta2(0) theta3(0) in normalized form.

    Dividing by 2 pi q^(1/8): sum (-1)^n (2n+1) q^(n(n+1)/2) = t1 * t2 * t3
    with t1 the stripped theta1 constant.  ``perturb`` maps a doubled exponent
    to an amount added to the left side (a negative control for tests).
    """
    lhs = theta_prime_sum(order)
    if perturb:
        lhs = lhs + QSeries({k: Fraction(v) for k, v in perturb.items()}, order)
    rhs = theta_constant("theta1", order) * theta_constant("theta2", order) \
        * theta_constant("theta3", order)
    residual = lhs - rhs
    bad = sorted(residual.coeffs)
    details = [{"name": "residual", "expected": "0",
                "got": "0" if not bad else f"nonzero at q^({bad[0]}/2)"}]
    return {
        "check_id": "theta.jacobi-identity",
        "identity": "theta'(0) = pi theta1(0) theta2(0) theta3(0)",
        "params": {"order": order},
        "status": "pass" if not bad else "fail",
        "details": details,
    }
