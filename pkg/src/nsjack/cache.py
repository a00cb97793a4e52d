"""Line-oriented text cache for JackTables.

    NSJACK 1
    N=3
    alpha=2/1
    E 1,0,0 := 1 * 1,0,0 ; 1/3 * 0,1,0 ; 1/3 * 0,0,1

Records are ordered by weight and then lexicographically descending;
terms are lexicographically descending by exponent.  Serialising the same
table twice gives identical bytes.
"""

from fractions import Fraction

from .jack import JackTable
from .polyring import Poly

MAGIC = "NSJACK"
VERSION = 1


class CacheFormatError(ValueError):
    pass


def format_scalar(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_alpha(alpha):
    alpha = Fraction(alpha)
    return f"{alpha.numerator}/{alpha.denominator}"


def _fmt_comp(eta):
    return ",".join(str(x) for x in eta)


def _parse_comp(text, n):
    try:
        comp = tuple(int(x) for x in text.strip().split(","))
    except ValueError as exc:
        raise CacheFormatError(f"bad composition {text!r}") from exc
    if len(comp) != n or min(comp) < 0:
        raise CacheFormatError(f"composition {text!r} does not fit N={n}")
    return comp


def _sort_key(eta):
    return (sum(eta), tuple(-x for x in eta))


def format_poly(poly):
    return " ; ".join(f"{format_scalar(c)} * {_fmt_comp(m)}" for m, c in poly.items())


def serialize(table):
    lines = [f"{MAGIC} {VERSION}", f"N={table.n}", f"alpha={format_alpha(table.alpha)}"]
    for eta in sorted(table.entries, key=_sort_key):
        lines.append(f"E {_fmt_comp(eta)} := {format_poly(table.entries[eta])}")
    return "\n".join(lines) + "\n"


def parse(text):
    lines = text.splitlines()
    if len(lines) < 3:
        raise CacheFormatError("truncated header")
    if lines[0].split() != [MAGIC, str(VERSION)]:
        raise CacheFormatError(f"unknown format tag {lines[0]!r}")
    if not lines[1].startswith("N="):
        raise CacheFormatError("missing N=")
    if not lines[2].startswith("alpha="):
        raise CacheFormatError("missing alpha=")
    n = int(lines[1][2:])
    alpha = Fraction(lines[2][6:])
    entries = {}
    for lineno, line in enumerate(lines[3:], start=4):
        if not line.strip():
            continue
        if not line.startswith("E ") or " := " not in line:
            raise CacheFormatError(f"line {lineno}: malformed record")
        head, body = line[2:].split(" := ", 1)
        eta = _parse_comp(head, n)
        terms = {}
        for chunk in body.split(" ; "):
            try:
                coeff, mono = chunk.split(" * ")
                terms[_parse_comp(mono, n)] = Fraction(coeff)
            except ValueError as exc:
                raise CacheFormatError(f"line {lineno}: bad term {chunk!r}") from exc
        entries[eta] = Poly(n, terms)
    return JackTable(n, alpha, entries)


def write_table(table, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(table))


def read_table(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
