"""The p = 1 coefficients computed by induction along the generation graph.

Starting from the expansion of z_i in the degree-one E's, the coefficients
c[eta][j][nu] of z_j E_eta are pushed through Phi (a cyclic relabelling of
the variable index) and through s_i, where they are carried in the
normalised form

    tilde(c)[eta, nu] = d'_nu e'_eta / (d'_eta e'_nu) * c[eta, nu]

so that a single update rule covers every nu.
"""

from fractions import Fraction

from ..compositions import compositions_up_to, delta_bar, hooks, phi_action, phi_inverse, s_action
from ..errors import nonzero
from ..jack import first_descent


class RecurrenceEngine:
    def __init__(self, n, alpha):
        self.n = n
        self.alpha = Fraction(alpha)
        self._memo = {}

    def _norm(self, eta, nu):
        # c = _norm(eta, nu) * tilde(c)
        he, hn = hooks(eta, self.alpha), hooks(nu, self.alpha)
        return he.d_prime * hn.e_prime / (hn.d_prime * he.e_prime)

    def _initial(self):
        n, alpha = self.n, self.alpha
        unit = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
        out = {}
        for i in range(1, n + 1):
            row = {unit[i - 1]: Fraction(1)}
            for j in range(i + 1, n + 1):
                row[unit[j - 1]] = -1 / nonzero(alpha + j - 1, f"alpha+{j - 1}", alpha)
            out[i] = row
        return out

    def coeffs(self, eta):
        """{j: {nu: c}} with z_j E_eta = sum_nu c E_nu (nonzero entries only)."""
        eta = tuple(eta)
        if eta in self._memo:
            return self._memo[eta]
        if not any(eta):
            out = self._initial()
        else:
            i = first_descent(eta)
            if i is not None:
                out = self._swap_step(s_action(eta, i), i)
            else:
                out = self._phi_step(phi_inverse(eta))
        self._memo[eta] = out
        return out

    def _phi_step(self, mu):
        src = self.coeffs(mu)
        n = self.n
        out = {}
        for j in range(1, n + 1):
            from_j = j + 1 if j < n else 1
            out[j] = {phi_action(nu): c for nu, c in src[from_j].items()}
        return out

    def _swap_step(self, mu, i):
        """Coefficients for s_i mu, given mu_i < mu_{i+1}."""
        alpha = self.alpha
        src = self.coeffs(mu)
        target = s_action(mu, i)
        tilde = {
            j: {nu: c / self._norm(mu, nu) for nu, c in row.items()}
            for j, row in src.items()
        }
        candidates = set()
        for row in src.values():
            for nu in row:
                candidates.add(nu)
                candidates.add(s_action(nu, i))
        inv_mu = 1 / nonzero(delta_bar(mu, i, alpha), f"delta_bar_{i}{mu}", alpha)
        lead = nonzero(1 + inv_mu, f"1 + 1/delta_bar_{i}{mu}", alpha)
        out = {j: {} for j in range(1, self.n + 1)}
        for nu in candidates:
            snu = s_action(nu, i)
            inv_nu = 1 / nonzero(delta_bar(nu, i, alpha), f"delta_bar_{i}{nu}", alpha)
            for j in range(1, self.n + 1):
                jj = i + 1 if j == i else i if j == i + 1 else j
                rhs = (
                    (1 - inv_nu) * tilde[jj].get(snu, 0)
                    + inv_nu * tilde[jj].get(nu, 0)
                    - inv_mu * tilde[j].get(nu, 0)
                )
                if rhs:
                    out[j][nu] = rhs / lead * self._norm(target, nu)
        return out

    def table(self, max_weight):
        """Flat map (eta, j, nu) -> c over all |eta| <= max_weight."""
        flat = {}
        for eta in compositions_up_to(self.n, max_weight):
            for j, row in self.coeffs(eta).items():
                for nu, c in row.items():
                    flat[(eta, j, nu)] = c
        return flat


def recurrence_engine(n, alpha, max_weight):
    return RecurrenceEngine(n, alpha).table(max_weight)
