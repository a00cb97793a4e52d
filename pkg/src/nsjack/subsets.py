"""Index subsets labelling the Pieri supports.

Subsets are tuples of strictly increasing 1-based indices ``(t_1, ..., t_s)``.
"""

from itertools import combinations, permutations

from .compositions import add_ones, eta_bar, preceq


def all_subsets(n):
    """Nonempty subsets of {1..n}, in lexicographic order."""
    out = []
    for s in range(1, n + 1):
        out.extend(combinations(range(1, n + 1), s))
    return sorted(out)


def _check(eta, subset):
    if not subset or list(subset) != sorted(set(subset)):
        raise ValueError(f"bad index subset {subset}")
    if subset[0] < 1 or subset[-1] > len(eta):
        raise ValueError(f"subset {subset} out of range for N={len(eta)}")


def c_I(eta, subset):
    """Cycle the parts on ``subset`` one step up, adding a box to the part
    that wraps around to t_s."""
    _check(eta, subset)
    t = subset
    nu = list(eta)
    for k in range(len(t) - 1):
        nu[t[k] - 1] = eta[t[k + 1] - 1]
    nu[t[-1] - 1] = eta[t[0] - 1] + 1
    return tuple(nu)


def is_maximal(eta, subset):
    _check(eta, subset)
    t = (0,) + tuple(subset)
    for u in range(1, len(t)):
        target = eta[t[u] - 1]
        for j in range(t[u - 1] + 1, t[u]):
            if eta[j - 1] == target:
                return False
    bump = eta[subset[0] - 1] + 1
    return all(eta[j - 1] != bump for j in range(subset[-1] + 1, len(eta) + 1))


def maximality_via_nu(eta, subset):
    """Maximality of ``subset`` tested on nu = c_I(eta) instead of on eta."""
    nu = c_I(eta, subset)
    n = len(eta)
    t = tuple(subset) + (n + 1,)
    top = nu[subset[-1] - 1] - 1
    if any(nu[j - 1] == top for j in range(1, subset[0])):
        return False
    for u in range(len(subset)):
        ref = nu[t[u] - 1]
        if any(nu[j - 1] == ref for j in range(t[u] + 1, t[u + 1])):
            return False
    return True


def maximal_sets(eta):
    return [s for s in all_subsets(len(eta)) if is_maximal(eta, s)]


def support_J(eta, p):
    """All nu with eta <= nu <= eta + (1^N) and |nu| = |eta| + p.

    Built by adding a box to p rows, then moving boxed rows down (or
    leaving them) and the other rows up (or leaving them).
    Returned sorted lexicographically descending.
    """
    n = len(eta)
    if not 0 <= p <= n:
        raise ValueError(f"p={p} out of range for N={n}")
    found = set()
    for rows in combinations(range(n), p):
        boxed = set(rows)
        for pi in permutations(range(n)):
            if any((pi[r] < r) if r in boxed else (pi[r] > r) for r in range(n)):
                continue
            nu = [0] * n
            for r in range(n):
                nu[pi[r]] = eta[r] + (r in boxed)
            found.add(tuple(nu))
    top = add_ones(eta)
    for nu in found:
        if not (preceq(eta, nu) and preceq(nu, top)):
            raise AssertionError(f"{nu} escapes the support sandwich for {eta}")
    return sorted(found, reverse=True)


def hat_c_I(eta, subset):
    """Add a box to every row off ``subset`` and cycle the subset one step down,
    adding a box to each part that moves."""
    _check(eta, subset)
    t = subset
    nu = [x + 1 for x in eta]
    nu[t[0] - 1] = eta[t[-1] - 1]
    for u in range(1, len(t)):
        nu[t[u] - 1] = eta[t[u - 1] - 1] + 1
    return tuple(nu)


def is_hat_maximal(eta, subset):
    _check(eta, subset)
    n = len(eta)
    low = eta[subset[-1] - 1] - 1
    if any(eta[j - 1] == low for j in range(1, subset[0])):
        return False
    t = tuple(subset) + (n + 1,)
    for u in range(len(subset)):
        ref = eta[t[u] - 1]
        if any(eta[j - 1] == ref for j in range(t[u] + 1, t[u + 1])):
            return False
    return True


def hat_maximal_sets(eta):
    return [s for s in all_subsets(len(eta)) if is_hat_maximal(eta, s)]


def phi_of_I(subset, n):
    out = [j - 1 for j in subset if j >= 2]
    if 1 in subset:
        out.append(n)
    return tuple(sorted(out))


def fixed_swap_eigen_check(eta, subset, i, alpha):
    """Diagnostic only.  For i not in I, i+1 in I and s_i fixing
    nu = c_I(eta), return whether nu_bar_{i+1} == eta_bar_i - 1.
    Returns None outside that case."""
    if i in subset or i + 1 not in subset:
        return None
    nu = c_I(eta, subset)
    if nu[i - 1] != nu[i]:
        return None
    return eta_bar(nu, alpha)[i] == eta_bar(eta, alpha)[i - 1] - 1
