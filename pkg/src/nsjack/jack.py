"""Non-symmetric Jack polynomials E_eta and symmetric Jack polynomials P_kappa."""

import threading
from fractions import Fraction

from .compositions import (
    compositions_up_to, delta_bar, eta_bar, is_partition, phi_inverse, s_action,
)
from .errors import ZeroLeadingCoefficient, nonzero
from .polyring import Poly


def first_descent(eta):
    """Smallest 1-based i with eta_i > eta_{i+1}, or None."""
    for k in range(len(eta) - 1):
        if eta[k] > eta[k + 1]:
            return k + 1
    return None


class JackTable:
    """Memo table of E_eta for fixed (n, alpha).

    Inserts are idempotent and guarded by a lock, so a table may be filled
    from several threads; reads of completed entries need no locking.
    """

    def __init__(self, n, alpha, entries=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.alpha = Fraction(alpha)
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        self.entries = dict(entries or {})
        self._lock = threading.Lock()

    def __contains__(self, eta):
        return tuple(eta) in self.entries

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, JackTable)
            and (self.n, self.alpha, self.entries) == (other.n, other.alpha, other.entries)
        )

    def _store(self, eta, poly):
        with self._lock:
            return self.entries.setdefault(eta, poly)

    def E(self, eta, descent=None):
        """Return E_eta, generating (and caching) it if necessary.

        ``descent`` optionally picks which descent to peel off at each step
        (a callable eta -> 1-based index); it exists to test that the result
        does not depend on the generation path, and bypasses the cache.
        """
        eta = tuple(eta)
        if len(eta) != self.n:
            raise ValueError(f"{eta} has length {len(eta)}, table has n={self.n}")
        if descent is None and eta in self.entries:
            return self.entries[eta]
        poly = self._build(eta, descent)
        if descent is None:
            poly = self._store(eta, poly)
        return poly

    def _build(self, eta, descent):
        if not any(eta):
            return Poly.one(self.n)
        i = descent(eta) if descent else first_descent(eta)
        if i is not None:
            mu = s_action(eta, i)
            e_mu = self.E(mu, descent)
            db = nonzero(delta_bar(mu, i, self.alpha), f"delta_bar_{i}{mu}", self.alpha)
            return e_mu.swap(i, i + 1) - e_mu / db
        return self.E(phi_inverse(eta), descent).phi()

    def fill(self, max_weight):
        for eta in compositions_up_to(self.n, max_weight):
            self.E(eta)
        return self


def generate_E(eta, alpha, table=None):
    if table is None:
        table = JackTable(len(eta), alpha)
    elif table.alpha != Fraction(alpha):
        raise ValueError("table was built for a different alpha")
    return table.E(eta)


def cherednik_apply(i, f, alpha):
    """Apply the i-th Cherednik operator (1-based i) to the polynomial f."""
    alpha = Fraction(alpha)
    n = f.n
    zi = Poly.var(n, i)
    out = (zi * f.partial(i)).scale(alpha) + f.scale(1 - i)
    for p in range(1, n + 1):
        if p == i:
            continue
        dd = f.divided_difference(i, p)
        out = out + (zi * dd if p < i else Poly.var(n, p) * dd)
    return out


def eigen_defect(eta, poly, alpha):
    """List of (i, residual) for which the eigenrelation fails."""
    bar = eta_bar(eta, alpha)
    bad = []
    for i in range(1, len(eta) + 1):
        r = cherednik_apply(i, poly, alpha) - poly.scale(bar[i - 1])
        if r:
            bad.append((i, r))
    return bad


def symmetric_P(kappa, alpha, table=None):
    """Monic symmetric Jack polynomial P_kappa from symmetrising E_kappa."""
    kappa = tuple(kappa)
    if not is_partition(kappa):
        raise ValueError(f"{kappa} is not a partition")
    e = generate_E(kappa, alpha, table)
    sym = e.symmetrize()
    lead = sym.coeff(kappa)
    if not lead:
        raise ZeroLeadingCoefficient(f"symmetrised E_{kappa} misses z^{kappa}")
    return sym / lead
