"""Closed-form Pieri expansions for z_i E_eta, e_1 E_eta and e_{N-1} E_eta."""

from dataclasses import dataclass
from fractions import Fraction

from ..compositions import hooks
from ..subsets import c_I, hat_c_I, hat_maximal_sets, maximal_sets
from .kernel import kernel


@dataclass(frozen=True)
class PieriExpansion:
    """``selector`` is one of ("z", i), ("complement", j), ("e", p), ("sym", p)."""

    source: tuple
    selector: tuple
    terms: tuple

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, nu):
        return self.as_dict().get(tuple(nu), Fraction(0))


def _finish(source, selector, terms):
    terms = sorted(((nu, c) for nu, c in terms.items() if c), reverse=True)
    return PieriExpansion(tuple(source), selector, tuple(terms))


def _subset_for(eta, nu, labelled):
    for t in labelled:
        if t[1] == tuple(nu):
            return t[0]
    return None


def coeff_p1(eta, i, nu, alpha):
    """Coefficient of E_nu in z_i E_eta."""
    alpha = Fraction(alpha)
    t = _subset_for(eta, nu, [(s, c_I(eta, s)) for s in maximal_sets(eta)])
    if t is None or i not in t:
        return Fraction(0)
    return _p1_term(eta, t, i, alpha)


def _p1_term(eta, t, i, alpha):
    k = kernel(eta, t, alpha)
    h_eta, h_nu = hooks(eta, alpha), hooks(c_I(eta, t), alpha)
    pref = h_eta.d_prime * h_nu.e_prime / (h_nu.d_prime * h_eta.e_prime)
    return pref * k.chi_tilde[i] * k.A * k.Bhat


def expand_z_i(eta, i, alpha):
    alpha = Fraction(alpha)
    terms = {}
    for t in maximal_sets(eta):
        if i in t:
            terms[c_I(eta, t)] = _p1_term(eta, t, i, alpha)
    return _finish(eta, ("z", i), terms)


def expand_e1(eta, alpha):
    """(z_1 + ... + z_N) E_eta from the summed closed form."""
    alpha = Fraction(alpha)
    d_eta = hooks(eta, alpha).d_prime
    terms = {}
    for t in maximal_sets(eta):
        nu = c_I(eta, t)
        k = kernel(eta, t, alpha)
        terms[nu] = -alpha * alpha * d_eta * k.A * k.Btilde / hooks(nu, alpha).d_prime
    return _finish(eta, ("e", 1), terms)


def coeff_pN1(eta, j1, nu, alpha):
    """Coefficient of E_nu in (prod_{j != j1} z_j) E_eta."""
    alpha = Fraction(alpha)
    t = _subset_for(eta, nu, [(s, hat_c_I(eta, s)) for s in hat_maximal_sets(eta)])
    if t is None or j1 not in t:
        return Fraction(0)
    return _pN1_term(eta, t, j1, alpha)


def _pN1_term(eta, t, j1, alpha):
    # the subset factors are taken at the target nu, the source of the dual
    # p = 1 expansion z_j1 E_nu -> E_{eta + (1^N)}
    nu = hat_c_I(eta, t)
    k = kernel(nu, t, alpha)
    h_eta, h_nu = hooks(eta, alpha), hooks(nu, alpha)
    pref = h_eta.e * h_nu.d / (h_eta.d * h_nu.e)
    return pref * k.chi_tilde[j1] * k.A * k.Bhat


def expand_complement(eta, j1, alpha):
    alpha = Fraction(alpha)
    terms = {}
    for t in hat_maximal_sets(eta):
        if j1 in t:
            terms[hat_c_I(eta, t)] = _pN1_term(eta, t, j1, alpha)
    return _finish(eta, ("complement", j1), terms)


def expand_eN1(eta, alpha):
    alpha = Fraction(alpha)
    h_eta = hooks(eta, alpha)
    terms = {}
    for t in hat_maximal_sets(eta):
        nu = hat_c_I(eta, t)
        h_nu = hooks(nu, alpha)
        k = kernel(nu, t, alpha)
        terms[nu] = -alpha * (h_eta.e / h_eta.d) * (h_nu.d / h_nu.e) * k.A * k.Bhat
    return _finish(eta, ("e", len(eta) - 1), terms)
