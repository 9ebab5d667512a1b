"""Chern-Simons transgression forms for the odd-dimensional formulas.

The tangent bundle of the odd manifold has roots a_1..a_(d-1); the last root
slot a_d carries the kernel argument b.  The generator ``s`` (weight 1) stands
for the trace of the Chern-Simons 3-form, so the top component of a CS form
is its homogeneous part of degree d.  The common factors 1/(8 pi^2) and the
2 pi i of the kernel are dropped on both sides of every identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charforms import (ThetaBundleSpec, a_hat, ch_theta_bundle, check_hypothesis, euler_factor,
                        l_hat, m0_even, ring_function, root_factor)
from .graded_ring import GradedPoly, RingConfig, embed, symmetric_product
from .qseries import DEFAULT_ORDER, QSeries, RootSeries
from .theta import ThetaExpansion, log_derivative_kernel, log_derivative_kernel_lambert

CS_KINDS = {"L": 1, "W": 2, "Wp": 3}


@dataclass(frozen=True)
class PhiForm:
    """Value = series * sqrt(2)^sqrt2_power."""

    which: str
    series: QSeries
    sqrt2_power: int = 0


@dataclass(frozen=True)
class CSKernel:
    """The kernel 1/b - d/db log theta(b) + d/db log theta_k(b) and the base form it multiplies."""

    which: str
    base: PhiForm
    kernel: ThetaExpansion


def cs_config(d: int) -> RingConfig:
    return RingConfig(d, use_cs_generator=True, s_degree=1)


def _which(which: str) -> int:
    try:
        return CS_KINDS[which]
    except KeyError:
        raise ValueError(f"unknown CS object {which!r}; expected L, W or Wp") from None


def _prepare(d: int, n: int, config: RingConfig | None) -> tuple[RingConfig, int]:
    check_hypothesis("odd", d, n)
    config = cs_config(d) if config is None else config
    if not config.use_cs_generator or config.d != d:
        raise ValueError("CS forms need a ring with the s generator and d root slots")
    return config, m0_even(d, n)


def phi_form(which: str, d: int, n: int, config: RingConfig | None = None,
             order: int = DEFAULT_ORDER, path: str = "theta") -> PhiForm:
    """Phi_L, Phi_W or Phi_W' over the d-1 tangent roots.

    Phi_L carries sqrt(2)^(2d-1); it is returned as 2^(d-1) times the
    remaining series with one leftover power of sqrt(2).
    """
    k = _which(which)
    config, m0 = _prepare(d, n, config)
    nroots = d - 1
    if path == "theta":
        deg = config.cutoff
        out = symmetric_product(root_factor(k, deg, order), config, nroots)
        if m0:
            out = out * embed(euler_factor(k, deg, order) ** m0, config, "c0")
    elif path == "direct":
        variant = {"L": "1", "W": "2", "Wp": "3"}[which]
        out = ch_theta_bundle(ThetaBundleSpec(variant, m0, False), config, order, nroots)
        if which == "L":
            pre = l_hat(config, nroots) * ring_function(config, "tanh_half", "c0") ** m0
        else:
            pre = a_hat(config, nroots) * ring_function(config, "sinh_half", "c0") ** m0
        out = out * pre
        if which == "L":
            # L-hat over d-1 roots already holds 2^(d-1)
            return PhiForm(which, out, 1)
    else:
        raise ValueError(f"unknown path {path!r}")
    if which == "L":
        return PhiForm(which, out * Fraction(2) ** (d - 1), 1)
    return PhiForm(which, out, 0)


def kernel_series(which: str, degree: int, order: int, path: str = "theta") -> RootSeries:
    k = _which(which)
    if path == "theta":
        return log_derivative_kernel(k, degree, order).series
    return log_derivative_kernel_lambert(k, degree, order)


def cs_kernel(which: str, d: int, n: int, config: RingConfig | None = None,
              order: int = DEFAULT_ORDER, path: str = "theta") -> CSKernel:
    config, _ = _prepare(d, n, config)
    kern = log_derivative_kernel(_which(which), config.cutoff, order) if path == "theta" else \
        ThetaExpansion(f"theta{_which(which)}", "log-derivative",
                       log_derivative_kernel_lambert(_which(which), config.cutoff, order), "lambert")
    return CSKernel(which, phi_form(which, d, n, config, order, path), kern)


def cs_form(which: str, d: int, n: int, config: RingConfig | None = None,
            order: int = DEFAULT_ORDER, path: str = "theta") -> QSeries:
    """The CS form of Phi times the kernel in b, times s.

    For L the leftover sqrt(2) of Phi_L meets the sqrt(2) in front of its
    transgression, leaving a rational factor 2.
    """
    config, _ = _prepare(d, n, config)
    phi = phi_form(which, d, n, config, order, path)
    kern = embed(kernel_series(which, config.cutoff, order, path), config, f"a{d}")
    out = phi.series * kern * GradedPoly.var(config, "s")
    return out * 2 if phi.sqrt2_power == 1 else out


def cs_top(series: QSeries) -> QSeries:
    return series.map_coeffs(lambda p: p.homogeneous(p.config.d))


def odd_base(d: int, n: int, config: RingConfig | None = None) -> GradedPoly:
    """A-hat(T) sinh(c0/2)^m0 s over the d-1 tangent roots."""
    config, m0 = _prepare(d, n, config)
    return a_hat(config, d - 1) * ring_function(config, "sinh_half", "c0") ** m0 \
        * GradedPoly.var(config, "s")


def odd_constant_closed_form(d: int, n: int, config: RingConfig | None = None) -> GradedPoly:
    """2 L-hat(T) tanh(c0/2)^m0 (1/b - 1/sinh b) s, the q^0 part of the L form."""
    config, m0 = _prepare(d, n, config)
    k1 = GradedPoly.univariate(config, f"a{d}", [_k1_coeff(j) for j in range(config.cutoff + 1)])
    return l_hat(config, d - 1) * ring_function(config, "tanh_half", "c0") ** m0 * k1 \
        * GradedPoly.var(config, "s") * 2


def _k1_coeff(j: int) -> Fraction:
    # 1/b - 1/sinh b = sum_{m>=1} (2 - 2^(2m)) B_2m b^(2m-1) / (2m)!
    if j % 2 == 0:
        return Fraction(0)
    from .theta import _bernoulli
    from math import factorial
    m2 = j + 1
    return -Fraction(2 - 2 ** m2) * _bernoulli(m2) / factorial(m2)


def k0_poly(config: RingConfig, var: str) -> GradedPoly:
    """1/b - coth(b/2)/2 as a polynomial in ``var``."""
    from .theta import _one_over_a_minus_half_coth
    return GradedPoly.univariate(config, var, [_one_over_a_minus_half_coth(j)
                                               for j in range(config.cutoff + 1)])
