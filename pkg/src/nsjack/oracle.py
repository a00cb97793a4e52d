"""Brute-force expansions used to check every closed form.

Nothing here calls the closed-form coefficient code; the only inputs are
polynomial arithmetic and the generated E_eta (audited separately by
:func:`eigen_audit`).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import NotHomogeneous, NotInSpan
from .jack import JackTable, eigen_defect, symmetric_P
from .polyring import Poly, triangle_max


@dataclass
class BasisExpansion:
    terms: list
    residual: Poly

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, nu):
        return self.as_dict().get(tuple(nu), Fraction(0))


def expand_in_E(f, table):
    """Expand a homogeneous polynomial in the basis {E_nu} by peeling off
    triangle-leading monomials."""
    if not f.is_homogeneous():
        raise NotHomogeneous(f"degrees {sorted(f.degrees())}")
    rest = f
    out = {}
    budget = len(f) + 1
    while rest:
        mu = triangle_max(rest.support())
        c = rest.coeff(mu)
        rest = rest - table.E(mu).scale(c)
        if rest.coeff(mu):
            raise NotInSpan(f"E_{mu} did not cancel z^{mu}")
        out[mu] = out.get(mu, 0) + c
        budget -= 1
        if budget < -10_000:
            raise NotInSpan("elimination failed to terminate")
    terms = sorted(((k, v) for k, v in out.items() if v), reverse=True)
    return BasisExpansion(terms, rest)


def brute_pieri(eta, subset, table):
    """Expand (prod_{i in subset} z_i) * E_eta; ``subset`` holds 1-based indices."""
    exps = [0] * table.n
    for i in subset:
        exps[i - 1] += 1
    return expand_in_E(table.E(eta).shift(exps), table)


def brute_ep(eta, p, table):
    """Expand e_p(z) E_eta."""
    n = table.n
    e = table.E(eta)
    f = Poly.zero(n)
    for rows in combinations(range(n), p):
        exps = [0] * n
        for r in rows:
            exps[r] = 1
        f = f + e.shift(exps)
    return expand_in_E(f, table)


def eigen_audit(table):
    """Check the Cherednik eigenrelation on every entry of ``table``.

    Returns a list of (eta, i) pairs that fail; empty means all good.
    """
    failures = []
    for eta in sorted(table.entries):
        for i, _ in eigen_defect(eta, table.entries[eta], table.alpha):
            failures.append((eta, i))
    return failures


def elementary(n, p):
    f = Poly.zero(n)
    for rows in combinations(range(n), p):
        exps = [0] * n
        for r in rows:
            exps[r] = 1
        f = f + Poly.monomial(exps)
    return f


@dataclass
class SymmetricBasis:
    """Cache of monic symmetric Jack polynomials for one (n, alpha)."""

    table: JackTable
    cache: dict = field(default_factory=dict)

    def P(self, kappa):
        kappa = tuple(kappa)
        if kappa not in self.cache:
            self.cache[kappa] = symmetric_P(kappa, self.table.alpha, self.table)
        return self.cache[kappa]


def expand_in_P(f, basis):
    """Expand a symmetric homogeneous polynomial in monic P_lambda."""
    rest = f
    out = {}
    while rest:
        lam = max(m for m in rest.support() if list(m) == sorted(m, reverse=True))
        c = rest.coeff(lam)
        rest = rest - basis.P(lam).scale(c)
        if rest.coeff(lam):
            raise NotInSpan(f"P_{lam} did not cancel m_{lam}")
        out[lam] = c
    return sorted(out.items(), reverse=True)


def brute_symmetric(kappa, p, alpha, n=None, basis=None):
    """Expand e_p * P_kappa in {P_lambda}; returns sorted (lambda, coeff) pairs."""
    kappa = tuple(kappa)
    if n is not None and len(kappa) < n:
        kappa = kappa + (0,) * (n - len(kappa))
    n = len(kappa)
    if basis is None:
        basis = SymmetricBasis(JackTable(n, alpha))
    return expand_in_P(elementary(n, p) * basis.P(kappa), basis)


__all__ = [
    "BasisExpansion", "SymmetricBasis", "brute_ep", "brute_pieri",
    "brute_symmetric", "eigen_audit", "elementary", "expand_in_E",
    "expand_in_P",
]
