"""Compositions, eigenvalue vectors, orderings and hook products.

A composition is a plain tuple of nonnegative ints.  Positions inside the
tuple are 0-based as usual in Python, but every *index argument* that names
a variable or a row (``i`` in ``s_i``, ``delta_bar(eta, i)``, the entries of
an index subset) is 1-based, matching the usual mathematical notation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import AlphaSingular, nonzero


def weight(eta):
    return sum(eta)


def partition_of(eta):
    """The partition rearrangement eta^+ (weakly decreasing)."""
    return tuple(sorted(eta, reverse=True))


def is_partition(eta):
    return all(eta[k] >= eta[k + 1] for k in range(len(eta) - 1))


def compositions(n, total):
    """All compositions of ``total`` into ``n`` nonnegative parts, lex descending."""
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(n - 1, total - first):
            yield (first,) + rest


def compositions_up_to(n, max_weight):
    for w in range(max_weight + 1):
        yield from compositions(n, w)


def partitions(n, total):
    """Partitions of ``total`` with at most ``n`` parts, padded to length n."""
    return [c for c in compositions(n, total) if is_partition(c)]


def add_ones(eta):
    return tuple(x + 1 for x in eta)


# -- eigenvalues -------------------------------------------------------------

def l_prime(eta):
    """Number of parts that precede eta_i in the stable decreasing sort."""
    n = len(eta)
    return tuple(
        sum(1 for k in range(i) if eta[k] >= eta[i])
        + sum(1 for k in range(i + 1, n) if eta[k] > eta[i])
        for i in range(n)
    )


def eta_bar(eta, alpha):
    """Eigenvalues of the Cherednik operators on E_eta, as a tuple of Fractions."""
    return _eta_bar(tuple(eta), Fraction(alpha))


@lru_cache(maxsize=None)
def _eta_bar(eta, alpha):
    return tuple(alpha * x - l for x, l in zip(eta, l_prime(eta)))


def delta_bar(eta, i, alpha):
    """eta_bar_i - eta_bar_{i+1} (1-based i)."""
    bar = eta_bar(eta, alpha)
    return bar[i - 1] - bar[i]


# -- orderings ---------------------------------------------------------------

def _check_weights(nu, eta):
    if len(nu) != len(eta) or sum(nu) != sum(eta):
        raise ValueError(f"incomparable compositions {nu} and {eta}")


def dominance_leq(nu, eta):
    _check_weights(nu, eta)
    s = t = 0
    for a, b in zip(nu, eta):
        s += a
        t += b
        if s > t:
            return False
    return True


def dominance_less(nu, eta):
    return nu != eta and dominance_leq(nu, eta)


def triangle_less(nu, eta):
    """The order governing the monomial expansion of E_eta."""
    _check_weights(nu, eta)
    np_, ep = partition_of(nu), partition_of(eta)
    if np_ != ep:
        return dominance_less(np_, ep)
    return dominance_less(nu, eta)


def shortest_sorter(eta):
    """Minimal-length permutation sorting eta into its partition.

    Returned as a tuple ``w`` where ``w[r]`` is the 0-based position of the
    part of rank ``r`` (stable sort, equal parts keep their order), so
    ``tuple(eta[p] for p in w) == partition_of(eta)``.
    """
    return tuple(sorted(range(len(eta)), key=lambda p: (-eta[p], p)))


def invert(perm):
    inv = [0] * len(perm)
    for a, b in enumerate(perm):
        inv[b] = a
    return tuple(inv)


def rank_matching(nu, eta):
    """pi = w_nu o w_eta^{-1}: 0-based map sending position i of nu to the
    position of eta holding the part of the same rank."""
    rank_nu = invert(shortest_sorter(nu))
    w_eta = shortest_sorter(eta)
    return tuple(w_eta[rank_nu[i]] for i in range(len(nu)))


def _preceq_via(nu, eta, pi):
    for i, p in enumerate(pi):
        if i < p:
            if not nu[i] < eta[p]:
                return False
        elif not nu[i] <= eta[p]:
            return False
    return True


def preceq(nu, eta):
    """nu <= eta in the order controlling the Pieri supports."""
    if len(nu) != len(eta):
        raise ValueError("length mismatch")
    return _preceq_via(nu, eta, rank_matching(nu, eta))


def preceq_exists(nu, eta):
    """Brute-force version of :func:`preceq`: search every permutation."""
    return any(_preceq_via(nu, eta, pi) for pi in permutations(range(len(nu))))


# -- hook products -----------------------------------------------------------

@dataclass(frozen=True)
class HookData:
    d_prime: Fraction
    d: Fraction
    e: Fraction
    e_prime: Fraction


def arm_leg(eta):
    """Yield (i, j, arm, leg) for each node of the diagram (1-based i, j)."""
    n = len(eta)
    for i in range(n):
        for j in range(1, eta[i] + 1):
            leg = sum(1 for k in range(i) if j <= eta[k] + 1 <= eta[i])
            leg += sum(1 for k in range(i + 1, n) if j <= eta[k] <= eta[i])
            yield i + 1, j, eta[i] - j, leg


def _gen_factorial(kappa, alpha, shift):
    # alpha^{|kappa|} [1 + shift/alpha]_kappa, expanded into a finite product
    out = Fraction(1)
    for row, part in enumerate(kappa):
        for m in range(1, part + 1):
            out *= nonzero(alpha * m + shift - row, f"alpha*{m}+{shift - row}", alpha)
    return out


def hooks(eta, alpha):
    return _hooks(tuple(eta), Fraction(alpha))


@lru_cache(maxsize=None)
def _hooks(eta, alpha):
    d_prime = d = Fraction(1)
    for i, j, a, leg in arm_leg(eta):
        d_prime *= nonzero(alpha * (a + 1) + leg, f"d'-factor at node ({i},{j})", alpha)
        d *= nonzero(alpha * (a + 1) + leg + 1, f"d-factor at node ({i},{j})", alpha)
    kappa = partition_of(eta)
    n = len(eta)
    return HookData(
        d_prime=d_prime,
        d=d,
        e=_gen_factorial(kappa, alpha, n),
        e_prime=_gen_factorial(kappa, alpha, n - 1),
    )


def norm_ratio(eta, alpha):
    """<E_eta|E_eta> / <1|1>."""
    h = hooks(eta, alpha)
    return h.d_prime * h.e / (h.d * h.e_prime)


# -- index actions -----------------------------------------------------------

def phi_action(eta):
    return tuple(eta[1:]) + (eta[0] + 1,)


def phi_inverse(eta):
    if eta[-1] == 0:
        raise ValueError(f"{eta} is not in the image of Phi")
    return (eta[-1] - 1,) + tuple(eta[:-1])


def s_action(eta, i):
    """Swap parts i and i+1 (1-based)."""
    if not 1 <= i < len(eta):
        raise ValueError(f"s_{i} undefined for N={len(eta)}")
    out = list(eta)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def eta_bar_transforms(eta, alpha):
    """Check how eta_bar moves under Phi and under each s_i.

    Returns ``(True, None)`` or ``(False, description)``.
    """
    alpha = Fraction(alpha)
    bar = eta_bar(eta, alpha)
    n = len(eta)
    pbar = eta_bar(phi_action(eta), alpha)
    expected = bar[1:] + (bar[0] + alpha,)
    if pbar != expected:
        return False, f"Phi: {pbar} != {expected}"
    for i in range(1, n):
        sbar = eta_bar(s_action(eta, i), alpha)
        if eta[i - 1] == eta[i]:
            want = bar
        else:
            want = list(bar)
            want[i - 1], want[i] = bar[i], bar[i - 1]
            want = tuple(want)
        if sbar != want:
            return False, f"s_{i}: {sbar} != {want}"
    return True, None


__all__ = [
    "AlphaSingular", "HookData", "add_ones", "arm_leg", "compositions",
    "compositions_up_to", "delta_bar", "dominance_leq", "dominance_less",
    "eta_bar", "eta_bar_transforms", "hooks", "invert", "is_partition",
    "l_prime", "norm_ratio", "partition_of", "partitions", "phi_action",
    "phi_inverse", "preceq", "preceq_exists", "rank_matching", "s_action",
    "shortest_sorter", "triangle_less", "weight",
]
