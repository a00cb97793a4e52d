"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction

from .compositions import triangle_less
from .errors import NotHomogeneous

Scalar = Fraction


class Poly:
    """Immutable map from exponent tuples to nonzero Fractions.

    Variables are numbered 1..n in the public methods.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != n:
                    raise ValueError(f"exponent {mono} has wrong length for n={n}")
                if c:
                    clean[tuple(mono)] = Fraction(c)
        self._terms = clean

    @classmethod
    def _raw(cls, n, terms):
        # terms already canonical: tuple keys, Fraction values, no zeros
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def var(cls, n, i):
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted lexicographically descending by exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    def support(self):
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.one(self.n) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            vars_ = "*".join(
                f"z{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(mono) if e
            )
            parts.append(f"({c})" + (f"*{vars_}" if vars_ else ""))
        return " + ".join(parts)

    def degrees(self):
        return {sum(m) for m in self._terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Poly.one(self.n) * other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly.zero(self.n)
        return Poly._raw(self.n, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError("polynomials in different numbers of variables")
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly._raw(self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def shift(self, exps):
        """Multiply by the monomial z^exps."""
        return Poly._raw(
            self.n,
            {tuple(a + b for a, b in zip(m, exps)): c for m, c in self._terms.items()},
        )

    # -- variable actions ----------------------------------------------------

    def permute(self, perm):
        """Substitute z_k -> z_{perm[k]} (0-based ``perm``)."""
        out = {}
        for m, c in self._terms.items():
            e = [0] * self.n
            for k, a in enumerate(m):
                e[perm[k]] = a
            out[tuple(e)] = c
        return Poly._raw(self.n, out)

    def swap(self, i, p):
        out = {}
        a, b = i - 1, p - 1
        for m, c in self._terms.items():
            e = list(m)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return Poly._raw(self.n, out)

    def partial(self, i):
        k = i - 1
        out = {}
        for m, c in self._terms.items():
            if m[k]:
                e = list(m)
                e[k] -= 1
                out[tuple(e)] = c * m[k]
        return Poly._raw(self.n, out)

    def phi(self):
        """f(z) -> z_N f(z_N, z_1, ..., z_{N-1})."""
        return Poly._raw(
            self.n, {m[1:] + (m[0] + 1,): c for m, c in self._terms.items()}
        )

    def divided_difference(self, i, p):
        """(f - s_{ip} f) / (z_i - z_p), computed monomial by monomial."""
        if i == p:
            raise ValueError("divided difference needs distinct variables")
        a, b = i - 1, p - 1
        out = {}
        for m, c in self._terms.items():
            hi, lo = m[a], m[b]
            if hi == lo:
                continue
            sign = 1
            if hi < lo:
                hi, lo, sign = lo, hi, -1
            # z_a^hi z_b^lo - z_a^lo z_b^hi = (z_a z_b)^lo (z_a^g - z_b^g), g = hi - lo
            # and (z_a^g - z_b^g)/(z_a - z_b) = sum_k z_a^k z_b^(g-1-k)
            e = list(m)
            for k in range(hi - lo):
                e[a] = lo + k
                e[b] = hi - 1 - k
                key = tuple(e)
                v = out.get(key, 0) + sign * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return Poly._raw(self.n, out)

    def symmetrize(self):
        from itertools import permutations

        total = Poly.zero(self.n)
        for perm in permutations(range(self.n)):
            total = total + self.permute(perm)
        return total

    # -- ordering ------------------------------------------------------------

    def leading_monomial_triangle(self):
        """A triangle-maximal exponent of the support.

        Among several maximal exponents the lexicographically greatest wins.
        """
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        if not self.is_homogeneous():
            raise NotHomogeneous(f"degrees {sorted(self.degrees())}")
        return triangle_max(self._terms)


def triangle_max(monomials):
    support = sorted(monomials, reverse=True)
    for cand in support:
        if not any(triangle_less(cand, other) for other in support if other != cand):
            return cand
    raise AssertionError("triangle order has no maximal element")
