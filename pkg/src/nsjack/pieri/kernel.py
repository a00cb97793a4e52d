"""Closed-form ingredients of the p = 1 and p = N-1 coefficients.

All functions of ``x`` take a tuple of Fractions (normally eta_bar / alpha)
and a subset ``t = (t_1, ..., t_s)`` of 1-based indices.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..compositions import eta_bar
from ..errors import nonzero


def a_fn(x, y, alpha):
    return 1 / nonzero(alpha * (x - y), "a(x,y): x - y", alpha)


def b_fn(x, y, alpha):
    diff = nonzero(x - y, "b(x,y): x - y", alpha)
    return (diff - 1 / alpha) / diff


def A_I(x, t, alpha):
    out = Fraction(1)
    for u in range(len(t) - 1):
        out *= a_fn(x[t[u] - 1], x[t[u + 1] - 1], alpha)
    return out * a_fn(x[t[-1] - 1] - 1, x[t[0] - 1], alpha)


def _gaps_below(x, t, alpha):
    # prod_u prod_{t_{u-1} < j < t_u} b(x_{t_u}, x_j), with t_0 = 0
    out = Fraction(1)
    prev = 0
    for tu in t:
        for j in range(prev + 1, tu):
            out *= b_fn(x[tu - 1], x[j - 1], alpha)
        prev = tu
    return out


def B_I(x, t, alpha):
    n = len(x)
    out = Fraction(1)
    bounds = tuple(t) + (n + 1,)
    for u in range(len(t)):
        for j in range(bounds[u] + 1, bounds[u + 1]):
            out *= b_fn(x[t[u] - 1], x[j - 1], alpha)
    last = x[t[-1] - 1]
    out *= last + Fraction(n - 1) / alpha
    for j in range(1, t[0]):
        out *= b_fn(last - 1, x[j - 1], alpha)
    return out


def B_tilde_I(x, t, alpha):
    n = len(x)
    first = x[t[0] - 1]
    out = _gaps_below(x, t, alpha)
    for j in range(t[-1] + 1, n + 1):
        out *= b_fn(first + 1, x[j - 1], alpha)
    return out * (first + 1 + Fraction(n - 1) / alpha)


def B_hat_I(x, t, alpha):
    """B_tilde without its linear factor; the tail product runs over rows
    below t_s and is anchored at x_{t_1} + 1."""
    n = len(x)
    first = x[t[0] - 1]
    out = _gaps_below(x, t, alpha)
    for j in range(t[-1] + 1, n + 1):
        out *= b_fn(first + 1, x[j - 1], alpha)
    return out


def chi_I(x, t, i, alpha):
    k = t.index(i)
    if k == 0:
        return alpha * (x[t[-1] - 1] - x[i - 1] - 1)
    return alpha * (x[t[k - 1] - 1] - x[i - 1])


def chi_tilde_I(x, t, i, alpha):
    k = t.index(i)
    if k == len(t) - 1:
        return alpha * (x[i - 1] - x[t[0] - 1] - 1)
    return alpha * (x[i - 1] - x[t[k + 1] - 1])


@dataclass(frozen=True)
class CoefficientKernel:
    A: Fraction
    Bhat: Fraction
    Btilde: Fraction
    B: Fraction
    chi: dict
    chi_tilde: dict


def scaled_bar(eta, alpha):
    alpha = Fraction(alpha)
    return tuple(v / alpha for v in eta_bar(eta, alpha))


def kernel(eta, subset, alpha):
    """Every subset-dependent factor, evaluated at eta_bar / alpha."""
    alpha = Fraction(alpha)
    t = tuple(subset)
    x = scaled_bar(eta, alpha)
    return CoefficientKernel(
        A=A_I(x, t, alpha),
        Bhat=B_hat_I(x, t, alpha),
        Btilde=B_tilde_I(x, t, alpha),
        B=B_I(x, t, alpha),
        chi={i: chi_I(x, t, i, alpha) for i in t},
        chi_tilde={i: chi_tilde_I(x, t, i, alpha) for i in t},
    )
