"""Candidate product formulas for the coefficients of e_p E_eta.

For general p there is no proven closed form.  The coefficient A of E_nu
in e_p E_eta is always taken from the brute-force oracle, normalised to

    B = d'_nu e'_eta / (e'_nu d'_eta) * A,

and compared against the product formula that is known to hold at the
extreme target eta + chi_{M*} and an extension of it with two extra
products.  The extension leaves the range of the row index j unspecified,
so it is evaluated over all rows ("all") and over moved rows only
("moved").

Permutations here map rows of eta to positions of nu (0-based): ``pi[j]``
is where the part in row j of eta ends up.  It is the rank-preserving
bijection, i.e. w_nu o w_eta^{-1} acting on rows.
"""

from dataclasses import dataclass, fields
from fractions import Fraction

from ..compositions import eta_bar, hooks, l_prime, rank_matching
from ..errors import AlphaSingular
from ..jack import JackTable
from ..oracle import brute_ep
from ..subsets import support_J


def m_star(eta, p):
    """eta + chi_{M*}: a box on each row whose part ranks among the top p."""
    return tuple(x + (l <= p - 1) for x, l in zip(eta, l_prime(eta)))


def row_map(eta, nu):
    return rank_matching(eta, nu)


def boxed_rows(eta, nu, pi):
    """Rows of eta that gained a box (G_1) and those that did not (G_0)."""
    g1 = [j for j in range(len(eta)) if nu[pi[j]] == eta[j] + 1]
    g0 = [j for j in range(len(eta)) if nu[pi[j]] == eta[j]]
    if len(g0) + len(g1) != len(eta):
        raise ValueError(f"{nu} is not reachable from {eta} by adding single boxes")
    return g0, g1


def moved_down(eta, nu, pi):
    """Number of boxed rows that move to a lower position."""
    _, g1 = boxed_rows(eta, nu, pi)
    return sum(1 for j in g1 if pi[j] > j)


def _ratio(num, den, what):
    if den == 0:
        raise AlphaSingular(what)
    return num / den


def b_swa(eta, nu, alpha, pi=None):
    alpha = Fraction(alpha)
    pi = row_map(eta, nu) if pi is None else pi
    bar = eta_bar(eta, alpha)
    g0, g1 = boxed_rows(eta, nu, pi)
    out = Fraction(1)
    for j in g0:
        for k in g1:
            if j < k:
                diff = bar[j] - bar[k]
                out *= _ratio(diff + 1, diff, f"eta_bar_{j + 1} - eta_bar_{k + 1}")
    for j in g1:
        for k in g0:
            if pi[j] < pi[k]:
                diff = bar[j] - bar[k]
                out *= _ratio(diff + alpha - 1, diff + alpha, f"eta_bar_{j + 1} - eta_bar_{k + 1} + alpha")
    return out


def extension_factor(eta, nu, alpha, reading, pi=None):
    """The two extra products; ``reading`` is "all" or "moved"."""
    if reading not in ("all", "moved"):
        raise ValueError(reading)
    alpha = Fraction(alpha)
    pi = row_map(eta, nu) if pi is None else pi
    bar = eta_bar(eta, alpha)
    out = Fraction(1)
    for j in range(len(eta)):
        pj = pi[j]
        if reading == "moved" and pj == j:
            continue
        p2 = pi[pj]
        if p2 < pj < j:
            out *= _ratio(1, bar[pj] - bar[j], f"eta_bar_{pj + 1} - eta_bar_{j + 1}")
        if j <= p2 <= pj:
            out *= _ratio(1, bar[pj] - bar[j] - alpha, f"eta_bar_{pj + 1} - eta_bar_{j + 1} - alpha")
    return out


@dataclass
class ConjectureRecord:
    eta: tuple
    p: int
    nu: tuple
    A_oracle: Fraction
    B_from_A: Fraction
    B_swa: object
    B_ext_all: object
    B_ext_moved: object
    is_m_star: bool
    is_p1: bool
    moved_down: int

    @property
    def at_most_one_down(self):
        return self.moved_down <= 1

    @property
    def swa_match(self):
        return self.B_swa == self.B_from_A

    @property
    def ext_all_match(self):
        return self.B_ext_all == self.B_from_A

    @property
    def ext_moved_match(self):
        return self.B_ext_moved == self.B_from_A

    @property
    def ext_match(self):
        return self.ext_all_match or self.ext_moved_match

    def row(self):
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                v = ",".join(map(str, v))
            elif v is None:
                v = "singular"
            out[f.name] = str(v)
        for name in ("at_most_one_down", "swa_match", "ext_all_match", "ext_moved_match"):
            out[name] = str(getattr(self, name))
        return out


def _guarded(fn, *args):
    try:
        return fn(*args)
    except AlphaSingular:
        return None


def conjecture_Bp(eta, p, nu, alpha, table=None, expansion=None):
    """Compare the oracle coefficient of E_nu in e_p E_eta with the candidates."""
    eta, nu = tuple(eta), tuple(nu)
    alpha = Fraction(alpha)
    if expansion is None:
        table = table or JackTable(len(eta), alpha)
        expansion = brute_ep(eta, p, table)
    A = expansion.coeff(nu)
    he, hn = hooks(eta, alpha), hooks(nu, alpha)
    B = hn.d_prime * he.e_prime / (hn.e_prime * he.d_prime) * A
    pi = row_map(eta, nu)
    swa = _guarded(b_swa, eta, nu, alpha, pi)
    ext = {}
    for reading in ("all", "moved"):
        extra = _guarded(extension_factor, eta, nu, alpha, reading, pi)
        ext[reading] = None if swa is None or extra is None else swa * extra
    return ConjectureRecord(
        eta=eta, p=p, nu=nu, A_oracle=A, B_from_A=B, B_swa=swa,
        B_ext_all=ext["all"], B_ext_moved=ext["moved"],
        is_m_star=(nu == m_star(eta, p)), is_p1=(p == 1),
        moved_down=moved_down(eta, nu, pi),
    )


def explore(n, p, alpha, max_weight, table=None):
    """One record per (eta, nu) with |eta| <= max_weight and nu in J_{N,p}[eta]."""
    from ..compositions import compositions_up_to

    alpha = Fraction(alpha)
    table = table or JackTable(n, alpha)
    records = []
    for eta in compositions_up_to(n, max_weight):
        expansion = brute_ep(eta, p, table)
        for nu in support_J(eta, p):
            records.append(conjecture_Bp(eta, p, nu, alpha, expansion=expansion))
    return records


def summarize(records):
    """Match counts per classification: {label: (matches, total)} for each candidate."""
    groups = {
        "m_star": [r for r in records if r.is_m_star],
        "p1": [r for r in records if r.is_p1],
        "at_most_one_down": [r for r in records if r.at_most_one_down],
        "all": list(records),
    }
    out = {}
    for label, rows in groups.items():
        out[label] = {
            "rows": len(rows),
            "swa": sum(r.swa_match for r in rows),
            "ext_all": sum(r.ext_all_match for r in rows),
            "ext_moved": sum(r.ext_moved_match for r in rows),
        }
    return out
