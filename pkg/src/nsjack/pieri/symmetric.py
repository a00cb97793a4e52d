"""Pieri rule for the symmetric Jack polynomials P_kappa.

The coefficient U(lambda/kappa) is a ratio of products of Pochhammer
symbols (u)_r = Gamma(u + r) / Gamma(u).  With r = 1 these are linear
factors; with r = 1/alpha only ratios whose arguments differ by an integer
k in {-1, 0, 1} occur, and (u + 1)_r / (u)_r = (u + r) / u collapses them,
so everything stays in exact rational arithmetic.
"""

from fractions import Fraction
from itertools import combinations

from ..compositions import is_partition
from ..errors import nonzero


def vertical_strips(kappa, m, n=None):
    """All partitions lambda with lambda/kappa a vertical m-strip (at most n parts)."""
    kappa = _pad(kappa, n)
    out = []
    for rows in combinations(range(len(kappa)), m):
        lam = list(kappa)
        for r in rows:
            lam[r] += 1
        if is_partition(lam):
            out.append(tuple(lam))
    return sorted(out, reverse=True)


def _pad(kappa, n):
    kappa = tuple(kappa)
    if n is not None:
        if len(kappa) > n:
            if any(kappa[n:]):
                raise ValueError(f"{kappa} has more than {n} parts")
            kappa = kappa[:n]
        kappa = kappa + (0,) * (n - len(kappa))
    if not is_partition(kappa):
        raise ValueError(f"{kappa} is not a partition")
    return kappa


def _poch_shift(u, k, r, alpha):
    """(u + k)_r / (u)_r for k in {-1, 0, 1}."""
    if k == 0:
        return Fraction(1)
    if k == 1:
        return (u + r) / nonzero(u, "Pochhammer base", alpha)
    # (u - 1)_r / (u)_r is the reciprocal of the k = 1 ratio at u - 1
    base = u - 1
    return base / nonzero(base + r, "Pochhammer base", alpha)


def symmetric_U(lam, kappa, alpha, n=None):
    alpha = Fraction(alpha)
    kappa = _pad(kappa, n)
    lam = _pad(lam, len(kappa))
    chi = [a - b for a, b in zip(lam, kappa)]
    if any(c not in (0, 1) for c in chi):
        raise ValueError(f"{lam}/{kappa} is not a vertical strip")
    n = len(kappa)
    r = 1 / alpha
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            gap = j - i
            # f^1 ratio: linear factors
            top = gap + alpha * (kappa[i] - kappa[j]) + chi[i] - chi[j]
            bot = gap + alpha * (kappa[i] - kappa[j])
            out *= top / nonzero(bot, f"f^1 factor ({i + 1},{j + 1})", alpha)
            # f^{1/alpha}(kappa) / f^{1/alpha}(kappa + chi)
            u = gap * r + kappa[i] - kappa[j]
            shifted = _poch_shift(u, chi[i] - chi[j], r, alpha)
            out /= nonzero(shifted, f"f^(1/alpha) factor ({i + 1},{j + 1})", alpha)
    return out


def expand_ep_P(kappa, p, alpha, n=None):
    """e_p P_kappa as a sorted list of (lambda, U)."""
    kappa = _pad(kappa, n)
    return [(lam, symmetric_U(lam, kappa, alpha)) for lam in vertical_strips(kappa, p)]
