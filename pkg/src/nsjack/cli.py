"""Command-line front end: gen, pieri, verify, explore.

Exit codes: 0 success, 1 verification failure or singular alpha,
2 usage error.
"""

import argparse
import csv
import sys
import time
from fractions import Fraction

from . import cache
from .compositions import add_ones, is_partition
from .errors import AlphaSingular
from .jack import JackTable
from .oracle import brute_ep
from .pieri import expansions as ex
from .pieri.conjecture import explore, summarize
from .pieri.symmetric import expand_ep_P
from .verify import all_passed, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_alpha(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad alpha {text!r}; use an integer or num/den")
    if value == 0:
        raise argparse.ArgumentTypeError("alpha must be nonzero")
    return value


def parse_composition(text):
    try:
        comp = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}; use e.g. 2,0,1")
    if any(x < 0 for x in comp):
        raise argparse.ArgumentTypeError("parts must be nonnegative")
    return comp


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _fmt(comp):
    return "(" + ",".join(map(str, comp)) + ")"


def build_parser():
    parser = argparse.ArgumentParser(prog="nsjack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate E_eta up to a weight and write a cache file")
    g.add_argument("--n", type=_positive, required=True)
    g.add_argument("--alpha", type=parse_alpha, required=True)
    g.add_argument("--max-weight", type=_nonneg, required=True)
    g.add_argument("--out", help="cache path (default: stdout)")

    p = sub.add_parser("pieri", help="print a Pieri-type expansion")
    p.add_argument("--eta", type=parse_composition, required=True)
    p.add_argument("--mode", nargs="+", required=True, metavar="MODE",
                   help="zi I | e1 | eN1 | ep P | sym P")
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--n", type=_positive, help="optional check on the length of --eta")

    v = sub.add_parser("verify", help="check every closed form against the oracle")
    v.add_argument("--n", type=_positive, default=3)
    v.add_argument("--alpha", type=parse_alpha, nargs="+", default=[Fraction(2)])
    v.add_argument("--max-weight", type=_nonneg, default=4)

    e = sub.add_parser("explore", help="compare general-p coefficients with candidate products")
    e.add_argument("--n", type=_positive, required=True)
    e.add_argument("--p", type=_positive, required=True)
    e.add_argument("--alpha", type=parse_alpha, required=True)
    e.add_argument("--max-weight", type=_nonneg, required=True)
    e.add_argument("--out", help="CSV path (default: stdout)")
    return parser


def _mode(parser, mode, n):
    name, args = mode[0], mode[1:]
    arity = {"zi": 1, "e1": 0, "eN1": 0, "ep": 1, "sym": 1}
    if name not in arity or len(args) != arity[name]:
        parser.error(f"bad --mode {' '.join(mode)}; expected zi I | e1 | eN1 | ep P | sym P")
    if not args:
        if name == "eN1" and n < 2:
            parser.error("eN1 needs N >= 2")
        return name, None
    try:
        k = int(args[0])
    except ValueError:
        parser.error(f"bad --mode argument {args[0]!r}")
    if not 1 <= k <= n:
        parser.error(f"--mode {name} needs 1 <= {k} <= N={n}")
    return name, k


def cmd_gen(n, alpha, max_weight, out=None, stream=None, log=None):
    stream, log = stream or sys.stdout, log or sys.stderr
    start = time.perf_counter()
    table = JackTable(n, alpha).fill(max_weight)
    text = cache.serialize(table)
    elapsed = time.perf_counter() - start
    if out:
        cache.write_table(table, out)
    else:
        stream.write(text)
    print(f"generated {len(table)} polynomials (N={n}, alpha={alpha}, |eta| <= {max_weight}) "
          f"in {elapsed:.3f}s", file=log)
    return table


def pieri_expansion(eta, name, k, alpha):
    """Returns (header, [(target, coeff)]) for one mode."""
    n = len(eta)
    src = f"E{_fmt(eta)}"
    if name == "zi":
        return f"z_{k} * {src}  [closed form]", ex.expand_z_i(eta, k, alpha).terms
    if name == "e1" or (name == "ep" and k == 1):
        return f"e_1 * {src}  [closed form]", ex.expand_e1(eta, alpha).terms
    if name == "eN1" or (name == "ep" and k == n - 1):
        return f"e_{n - 1} * {src}  [closed form]", ex.expand_eN1(eta, alpha).terms
    if name == "ep" and k == n:
        return f"e_{n} * {src}  [closed form]", ((add_ones(eta), Fraction(1)),)
    if name == "ep":
        table = JackTable(n, alpha)
        terms = tuple(sorted(brute_ep(eta, k, table).terms, reverse=True))
        return f"e_{k} * {src}  [oracle: no closed form for 1 < p < N-1]", terms
    if not is_partition(eta):
        raise ValueError(f"sym mode needs a partition, got {_fmt(eta)}")
    return f"e_{k} * P{_fmt(eta)}  [closed form]", tuple(expand_ep_P(eta, k, alpha))


def cmd_pieri(eta, name, k, alpha, stream=None):
    stream = stream or sys.stdout
    header, terms = pieri_expansion(eta, name, k, alpha)
    basis = "P" if name == "sym" else "E"
    print(f"{header}  alpha={alpha}", file=stream)
    for nu, c in terms:
        print(f"{basis}{_fmt(nu)}  {c}", file=stream)
    return terms


def cmd_verify(n, alphas, max_weight, stream=None):
    stream = stream or sys.stdout
    results = run_verify(n, alphas, max_weight, log=lambda s: print(s, file=stream))
    ok = all_passed(results)
    failed = [r.identity for r in results if not r.passed]
    if ok:
        print(f"all {len(results)} checks passed", file=stream)
    else:
        print(f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}", file=stream)
    return EXIT_OK if ok else EXIT_FAIL


CSV_COLUMNS = [
    "eta", "p", "nu", "A_oracle", "B_from_A", "B_swa", "B_ext_all", "B_ext_moved",
    "is_m_star", "is_p1", "moved_down", "at_most_one_down",
    "swa_match", "ext_all_match", "ext_moved_match",
]


def write_csv(records, fh):
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.row())


def cmd_explore(n, p, alpha, max_weight, out=None, stream=None, log=None):
    stream, log = stream or sys.stdout, log or sys.stderr
    records = explore(n, p, alpha, max_weight)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, stream)
    for label, s in summarize(records).items():
        print(f"{label}: rows={s['rows']} swa={s['swa']} ext_all={s['ext_all']} "
              f"ext_moved={s['ext_moved']}", file=log)
    return records


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "gen":
            cmd_gen(args.n, args.alpha, args.max_weight, args.out)
        elif args.command == "pieri":
            if args.n is not None and args.n != len(args.eta):
                parser.error(f"--eta has {len(args.eta)} parts but --n={args.n}")
            name, k = _mode(parser, args.mode, len(args.eta))
            if name == "sym" and not is_partition(args.eta):
                parser.error("sym mode needs --eta to be a partition")
            cmd_pieri(args.eta, name, k, args.alpha)
        elif args.command == "verify":
            return cmd_verify(args.n, args.alpha, args.max_weight)
        else:
            if args.p > args.n:
                parser.error("--p must be at most --n")
            cmd_explore(args.n, args.p, args.alpha, args.max_weight, args.out)
    except SystemExit as exc:
        return exc.code
    except AlphaSingular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
