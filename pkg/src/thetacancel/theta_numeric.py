"""Floating-point evaluation of the theta products and their transformation laws.

This is the only module that uses complex floats.  It evaluates the same
truncated product formulas as :mod:`thetacancel.theta` and checks the S and T
transformation laws, the derived laws for theta' and the laws for
delta_i, epsilon_i.  It also compares the exact q-expansions against direct
evaluation.
"""

from __future__ import annotations

import cmath
from collections.abc import Callable, Iterable

from .theta import eta_cubed, modular_pair, theta_constant, _kind

I = 1j
PI = cmath.pi
DEFAULT_SAMPLES = (2j, 1 + 1j, (1 + 3j) / 2)
DEFAULT_V = 0.3 + 0.1j


def _check_tau(tau: complex):
    if tau.imag <= 0:
        raise ValueError(f"tau must lie in the upper half plane, got {tau}")


def _parts(v: complex, tau: complex, kind: str, terms: int):
    """Prefactor g(v), its derivative, the product P and d/dv log P."""
    q = cmath.exp(2 * PI * I * tau)
    z = cmath.exp(2 * PI * I * v)
    if kind == "theta":
        g, dg = cmath.sin(PI * v), PI * cmath.cos(PI * v)
    elif kind == "theta1":
        g, dg = cmath.cos(PI * v), -PI * cmath.sin(PI * v)
    else:
        g, dg = 1, 0
    sign = -1 if kind in ("theta", "theta2") else 1
    integral = kind in ("theta", "theta1")
    prod = 1 + 0j
    logd = 0j
    for j in range(1, terms + 1):
        t = q ** j if integral else cmath.exp(2 * PI * I * tau * (j - 0.5))
        up, down = 1 + sign * z * t, 1 + sign * t / z
        prod *= (1 - q ** j) * up * down
        logd += 2 * PI * I * sign * (z * t / up - (t / z) / down)
    pre = 2 * cmath.exp(2 * PI * I * tau / 8) if integral else 1
    return pre, g, dg, prod, logd


def numeric_theta(v: complex, tau: complex, kind="theta", terms: int = 40) -> complex:
    """Truncated product value of theta_k(v, tau)."""
    _check_tau(tau)
    if terms < 1:
        raise ValueError("terms must be at least 1")
    pre, g, _, prod, _ = _parts(v, tau, _kind(kind), terms)
    return pre * g * prod


def numeric_theta_prime(v: complex, tau: complex, kind="theta", terms: int = 40) -> complex:
    """d/dv theta_k(v, tau), differentiating the product term by term."""
    _check_tau(tau)
    pre, g, dg, prod, logd = _parts(v, tau, _kind(kind), terms)
    return pre * (dg * prod + g * prod * logd)


def numeric_modular_pair(level: int, tau: complex, terms: int = 40) -> tuple[complex, complex]:
    t1, t2, t3 = (numeric_theta(0, tau, k, terms) ** 4 for k in ("theta1", "theta2", "theta3"))
    if level == 1:
        return (t2 + t3) / 8, t2 * t3 / 16
    if level == 2:
        return -(t1 + t3) / 8, t1 * t3 / 16
    if level == 3:
        return (t1 - t2) / 8, -t1 * t2 / 16
    raise ValueError(f"level must be 1, 2 or 3, got {level}")


def _root(tau: complex) -> complex:
    # principal branch; tau/i has positive real part on the upper half plane
    return cmath.sqrt(tau / I)


def transformation_laws(v: complex = DEFAULT_V, terms: int = 40
                        ) -> list[tuple[str, str, Callable[[complex], tuple[complex, complex]]]]:
    """(name, identity, tau -> (lhs, rhs)) for every law checked numerically."""
    th = lambda k, x, t: numeric_theta(x, t, k, terms)  # noqa: E731
    dth = lambda k, x, t: numeric_theta_prime(x, t, k, terms)  # noqa: E731
    e8 = cmath.exp(PI * I / 4)

    def s_factor(t):
        return _root(t) * cmath.exp(PI * I * t * v * v)

    laws = []
    t_partner = {"theta": "theta", "theta1": "theta1", "theta2": "theta3", "theta3": "theta2"}
    s_partner = {"theta": "theta", "theta1": "theta2", "theta2": "theta1", "theta3": "theta3"}
    for k in ("theta", "theta1", "theta2", "theta3"):
        tf = e8 if k in ("theta", "theta1") else 1
        sf = (1 / I) if k == "theta" else 1
        kp, ks = t_partner[k], s_partner[k]
        laws.append((f"{k}.T", f"{k}(v,tau+1) = {'e^(pi i/4) ' if tf != 1 else ''}{kp}(v,tau)",
                     lambda t, k=k, kp=kp, tf=tf: (th(k, v, t + 1), tf * th(kp, v, t))))
        laws.append((f"{k}.S", f"{k}(v,-1/tau) = {'(1/i) ' if sf != 1 else ''}(tau/i)^(1/2)"
                     f" e^(pi i tau v^2) {ks}(tau v,tau)",
                     lambda t, k=k, ks=ks, sf=sf: (th(k, v, -1 / t),
                                                   sf * s_factor(t) * th(ks, t * v, t))))
        laws.append((f"{k}'.T", f"{k}'(v,tau+1) = {'e^(pi i/4) ' if tf != 1 else ''}{kp}'(v,tau)",
                     lambda t, k=k, kp=kp, tf=tf: (dth(k, v, t + 1), tf * dth(kp, v, t))))
        laws.append((f"{k}'.S", f"{k}'(v,-1/tau) = {'(1/i) ' if sf != 1 else ''}(tau/i)^(1/2)"
                     f" e^(pi i tau v^2) (2 pi i tau v {ks}(tau v) + tau {ks}'(tau v))",
                     lambda t, k=k, ks=ks, sf=sf: (
                         dth(k, v, -1 / t),
                         sf * s_factor(t) * (2 * PI * I * t * v * th(ks, t * v, t)
                                             + t * dth(ks, t * v, t)))))
    laws.append(("theta'(0).S", "theta'(0,-1/tau) = (1/i)(tau/i)^(1/2) tau theta'(0,tau)",
                 lambda t: (dth("theta", 0, -1 / t), (1 / I) * _root(t) * t * dth("theta", 0, t))))
    laws.append(("jacobi", "theta'(0,tau) = pi theta1(0) theta2(0) theta3(0)",
                 lambda t: (dth("theta", 0, t),
                            PI * th("theta1", 0, t) * th("theta2", 0, t) * th("theta3", 0, t))))
    mp = lambda lvl, t: numeric_modular_pair(lvl, t, terms)  # noqa: E731
    laws.append(("delta2.S", "delta2(-1/tau) = tau^2 delta1(tau)",
                 lambda t: (mp(2, -1 / t)[0], t ** 2 * mp(1, t)[0])))
    laws.append(("epsilon2.S", "epsilon2(-1/tau) = tau^4 epsilon1(tau)",
                 lambda t: (mp(2, -1 / t)[1], t ** 4 * mp(1, t)[1])))
    laws.append(("delta2.T", "delta2(tau+1) = delta3(tau)",
                 lambda t: (mp(2, t + 1)[0], mp(3, t)[0])))
    laws.append(("epsilon2.T", "epsilon2(tau+1) = epsilon3(tau)",
                 lambda t: (mp(2, t + 1)[1], mp(3, t)[1])))
    return laws


def _entry(check_id: str, identity: str, params: dict, err: float, tol: float) -> dict:
    return {
        "check_id": check_id,
        "identity": identity,
        "params": params,
        "status": "pass" if err < tol else "fail",
        "details": [{"name": "abs_error", "expected": f"< {tol:.1e}", "got": f"{err:.3e}"}],
    }


def _fmt(z: complex) -> str:
    return f"{z.real:g}{z.imag:+g}i"


def numeric_transformation_suite(samples: Iterable[complex] = DEFAULT_SAMPLES, tol: float = 1e-9,
                                 v: complex = DEFAULT_V, terms: int = 40,
                                 formal_tol: float = 1e-8) -> list[dict]:
    """Check every law at every sample tau, plus the formal/numeric cross-check."""
    entries = []
    samples = list(samples)
    for tau in samples:
        _check_tau(tau)
    for name, identity, fn in transformation_laws(v, terms):
        for tau in samples:
            lhs, rhs = fn(tau)
            entries.append(_entry(f"numeric.{name}@{_fmt(tau)}", identity,
                                  {"tau": _fmt(tau), "v": _fmt(v), "terms": terms},
                                  abs(lhs - rhs), tol))
    entries.extend(formal_vs_numeric(2j, formal_tol, terms))
    return entries


def formal_vs_numeric(tau: complex = 2j, tol: float = 1e-8, terms: int = 40,
                      order: int = 8) -> list[dict]:
    """Evaluate the exact q-expansions at q = e^(2 pi i tau) and compare."""
    _check_tau(tau)
    qh = cmath.exp(PI * I * tau)
    q8 = cmath.exp(2 * PI * I * tau / 8)
    checks = []
    for k in ("theta1", "theta2", "theta3"):
        formal = theta_constant(k, order).evaluate(qh) * (2 * q8 if k == "theta1" else 1)
        checks.append((f"constant.{k}", f"{k}(0,tau) q-expansion", formal,
                       numeric_theta(0, tau, k, terms)))
    checks.append(("constant.theta'", "theta'(0,tau) q-expansion",
                   eta_cubed(order).evaluate(qh) * 2 * PI * q8,
                   numeric_theta_prime(0, tau, "theta", terms)))
    for lvl in (1, 2, 3):
        pair = modular_pair(lvl, order)
        dn, en = numeric_modular_pair(lvl, tau, terms)
        checks.append((f"delta{lvl}", f"delta{lvl} q-expansion", pair.delta.evaluate(qh), dn))
        checks.append((f"epsilon{lvl}", f"epsilon{lvl} q-expansion", pair.epsilon.evaluate(qh), en))
    return [_entry(f"formal.{name}", identity, {"tau": _fmt(tau), "order": order},
                   abs(a - b), tol) for name, identity, a, b in checks]
