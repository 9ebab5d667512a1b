"""Independent references used by the tests.

delta_i and epsilon_i come from classical divisor-sum formulas, Taylor
coefficients from sympy, so none of these share code with the engine.
"""

from fractions import Fraction

import sympy


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def delta1(order):
    """1/4 + 6 sum_n (sum of odd divisors of n) q^n, keyed by doubled exponent."""
    out = {0: Fraction(1, 4)}
    for n in range(1, order // 2 + 1):
        out[2 * n] = Fraction(6 * sum(k for k in _divisors(n) if k % 2))
    return out


def epsilon1(order):
    """1/16 + sum_n sum_{k | n} (-1)^k k^3 q^n."""
    out = {0: Fraction(1, 16)}
    for n in range(1, order // 2 + 1):
        out[2 * n] = Fraction(sum((-1) ** k * k ** 3 for k in _divisors(n)))
    return out


def delta2(order):
    """-1/8 - 3 sum_n (sum of odd divisors of n) q^(n/2)."""
    out = {0: Fraction(-1, 8)}
    for n in range(1, order + 1):
        out[n] = Fraction(-3 * sum(k for k in _divisors(n) if k % 2))
    return out


def epsilon2(order):
    """sum_n sum_{k | n, n/k odd} k^3 q^(n/2)."""
    out = {}
    for n in range(1, order + 1):
        out[n] = Fraction(sum(k ** 3 for k in _divisors(n) if (n // k) % 2))
    return out


def flip(series):
    return {k: (-v if k % 2 else v) for k, v in series.items()}


def modular_pairs(order):
    d2, e2 = delta2(order), epsilon2(order)
    return {"delta1": delta1(order), "epsilon1": epsilon1(order), "delta2": d2, "epsilon2": e2,
            "delta3": flip(d2), "epsilon3": flip(e2)}


def nonzero(series):
    return {k: v for k, v in series.items() if v}


def taylor(expr_text, n):
    """Taylor coefficients of a sympy expression in x up to x^n."""
    x = sympy.Symbol("x")
    expr = expr_text if isinstance(expr_text, sympy.Expr) else sympy.sympify(expr_text, locals={"x": x})
    poly = sympy.series(expr, x, 0, n + 1).removeO()
    return [Fraction(str(sympy.Rational(poly.coeff(x, k)))) for k in range(n + 1)]


def theta_sum(kind, order):
    """theta constants from their bilateral sums, keyed by doubled exponent."""
    out = {}
    if kind == "theta3":
        for m in range(-order, order + 1):
            if m * m <= order:
                out[m * m] = out.get(m * m, 0) + 1
    elif kind == "theta2":
        for m in range(-order, order + 1):
            if m * m <= order:
                out[m * m] = out.get(m * m, 0) + (-1) ** (m % 2)
    elif kind == "theta1":
        # 2 q^(1/8) sum_{n>=0} q^(n(n+1)/2), with the prefactor stripped
        n = 0
        while n * (n + 1) <= order:
            out[n * (n + 1)] = out.get(n * (n + 1), 0) + 1
            n += 1
    return {k: Fraction(v) for k, v in out.items() if v}
