"""Batch verification: every closed form against the oracle on a grid."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .compositions import add_ones, compositions_up_to, norm_ratio, partitions
from .jack import JackTable
from .oracle import SymmetricBasis, brute_ep, brute_pieri, brute_symmetric, eigen_audit
from .pieri import expansions as ex
from .pieri import kernel as kn
from .pieri.recurrence import RecurrenceEngine
from .pieri.symmetric import expand_ep_P
from .subsets import maximal_sets


@dataclass(frozen=True)
class CheckResult:
    identity: str
    n: int
    alpha: Fraction
    cases: int
    failure: str = None

    @property
    def passed(self):
        return self.failure is None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.identity}  N={self.n} alpha={self.alpha}  cases={self.cases}"
        return text if self.passed else f"{text}  first failure: {self.failure}"


class _Counter:
    def __init__(self):
        self.cases = 0
        self.failure = None

    def check(self, ok, what):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = what


def check_eigen(table, max_weight):
    c = _Counter()
    table.fill(max_weight)
    bad = eigen_audit(table)
    c.cases = len(table) * table.n
    if bad:
        c.failure = f"eta={bad[0][0]} i={bad[0][1]}"
    return c


def check_p1_oracle(table, max_weight):
    c = _Counter()
    for eta in compositions_up_to(table.n, max_weight):
        for i in range(1, table.n + 1):
            got = ex.expand_z_i(eta, i, table.alpha).as_dict()
            want = dict(brute_pieri(eta, (i,), table).terms)
            c.check(got == want, f"z_{i} E{eta}: {got} != {want}")
    return c


def check_recurrence(table, max_weight):
    c = _Counter()
    engine = RecurrenceEngine(table.n, table.alpha)
    for eta in compositions_up_to(table.n, max_weight):
        rows = engine.coeffs(eta)
        for i in range(1, table.n + 1):
            got = {nu: v for nu, v in rows[i].items() if v}
            want = ex.expand_z_i(eta, i, table.alpha).as_dict()
            c.check(got == want, f"z_{i} E{eta}: {got} != {want}")
    return c


def check_sum_rule(table, max_weight):
    c = _Counter()
    alpha = table.alpha
    for eta in compositions_up_to(table.n, max_weight):
        for t in maximal_sets(eta):
            total = sum(kn.kernel(eta, t, alpha).chi_tilde.values())
            c.check(total == -alpha, f"eta={eta} I={t}: sum={total}")
        summed = {}
        for i in range(1, table.n + 1):
            for nu, v in ex.expand_z_i(eta, i, alpha).terms:
                summed[nu] = summed.get(nu, 0) + v
        summed = {nu: v for nu, v in summed.items() if v}
        e1 = ex.expand_e1(eta, alpha).as_dict()
        c.check(e1 == summed, f"e_1 E{eta}: {e1} != {summed}")
        want = dict(brute_ep(eta, 1, table).terms)
        c.check(e1 == want, f"e_1 E{eta} vs oracle: {e1} != {want}")
    return c


def check_pN1_oracle(table, max_weight):
    c = _Counter()
    n, alpha = table.n, table.alpha
    for eta in compositions_up_to(n, max_weight):
        for j1 in range(1, n + 1):
            got = ex.expand_complement(eta, j1, alpha).as_dict()
            rest = tuple(j for j in range(1, n + 1) if j != j1)
            want = dict(brute_pieri(eta, rest, table).terms)
            c.check(got == want, f"prod_(j!={j1}) z_j E{eta}: {got} != {want}")
        got = ex.expand_eN1(eta, alpha).as_dict()
        want = dict(brute_ep(eta, n - 1, table).terms)
        c.check(got == want, f"e_{n - 1} E{eta}: {got} != {want}")
    return c


def check_pN_oracle(table, max_weight):
    c = _Counter()
    for eta in compositions_up_to(table.n, max_weight):
        got = dict(brute_ep(eta, table.n, table).terms)
        c.check(got == {add_ones(eta): 1}, f"e_N E{eta} = {got}")
    return c


def check_duality(table, max_weight):
    """Oracle coefficients of a product and of the complementary product agree after normalising."""
    c = _Counter()
    n, alpha = table.n, table.alpha
    for eta in compositions_up_to(n, max_weight):
        target = add_ones(eta)
        n_eta = norm_ratio(eta, alpha)
        for p in sorted({1, n - 1}):
            for subset in combinations(range(1, n + 1), p):
                rest = tuple(j for j in range(1, n + 1) if j not in subset)
                for nu, v in brute_pieri(eta, subset, table).terms:
                    dual = brute_pieri(nu, rest, table).coeff(target)
                    lhs, rhs = v * norm_ratio(nu, alpha), dual * n_eta
                    c.check(lhs == rhs, f"eta={eta} S={subset} nu={nu}: {lhs} != {rhs}")
        for i in range(1, n + 1):
            for nu, v in ex.expand_z_i(eta, i, alpha).terms:
                dual = ex.coeff_pN1(nu, i, target, alpha)
                lhs, rhs = v * norm_ratio(nu, alpha), dual * n_eta
                c.check(lhs == rhs, f"closed forms eta={eta} i={i} nu={nu}: {lhs} != {rhs}")
    return c


def check_symmetric(table, max_weight):
    c = _Counter()
    basis = SymmetricBasis(table)
    for w in range(max_weight + 1):
        for kappa in partitions(table.n, w):
            for p in range(1, table.n + 1):
                got = expand_ep_P(kappa, p, table.alpha)
                want = brute_symmetric(kappa, p, table.alpha, basis=basis)
                c.check(got == want, f"e_{p} P{kappa}: {got} != {want}")
    return c


SUITES = [
    ("eigenrelation of E_eta", check_eigen, 1),
    ("p=1 closed form vs oracle", check_p1_oracle, 2),
    ("recurrence engine vs closed form", check_recurrence, 2),
    ("sum rule and e_1 expansion", check_sum_rule, 2),
    ("p=N-1 closed forms vs oracle", check_pN1_oracle, 2),
    ("p=N shift e_N E_eta = E_(eta+1)", check_pN_oracle, 1),
    ("duality of complementary products", check_duality, 2),
    ("symmetric Pieri rule vs oracle", check_symmetric, 1),
]


def run_verify(n, alphas, max_weight, log=None):
    """Run every suite for each alpha; returns the list of CheckResults."""
    results = []
    for alpha in alphas:
        alpha = Fraction(alpha)
        table = JackTable(n, alpha)
        for name, fn, min_n in SUITES:
            if n < min_n:
                continue
            counter = fn(table, max_weight)
            result = CheckResult(name, n, alpha, counter.cases, counter.failure)
            results.append(result)
            if log:
                log(result.line())
    return results


def all_passed(results):
    return all(r.passed for r in results)
