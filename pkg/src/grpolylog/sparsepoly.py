"""Sparse multivariate polynomials over Z with exact arithmetic.

Variables are the entries of a generic m x n matrix, flattened row-major;
an exponent vector is stored as `bytes` of length m*n, so byte-wise
comparison of keys is lexicographic comparison of exponent vectors.
This representation is used for the polynomials we actually materialize
(Pluecker minors, numerators of consecutive coordinate differences, unit
tests); large products are handled elsewhere by evaluation.
"""

import itertools
from fractions import Fraction
from math import gcd


def perm_sign(p):
    """Sign of a permutation given as a sequence (any hashable values)."""
    p = list(p)
    ref = sorted(range(len(p)), key=lambda i: p[i])
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = ref[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


class SparsePoly:
    """Immutable dict-backed polynomial: {exponent bytes: int coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = dict(terms) if terms else {}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        p = cls(nvars)
        if c:
            p.terms[bytes(nvars)] = int(c)
        return p

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, SparsePoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def num_terms(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def add(self, other, scale=1):
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + scale * v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return SparsePoly(self.nvars, out)

    def sub(self, other):
        return self.add(other, -1)

    def neg(self):
        return SparsePoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def mul(self, other):
        out = {}
        n = self.nvars
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = bytes(x + y for x, y in zip(ka, kb))
                nv = out.get(k, 0) + va * vb
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return SparsePoly(n, out)

    def scale(self, c):
        if c == 0:
            return SparsePoly(self.nvars)
        return SparsePoly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def content_and_sign(self):
        """(g, s): g = gcd of coefficients (0 for zero poly), s = sign of the
        lexicographically-leading coefficient."""
        if not self.terms:
            return 0, 1
        g = 0
        for v in self.terms.values():
            g = gcd(g, abs(v))
        lead = max(self.terms)
        s = 1 if self.terms[lead] > 0 else -1
        return g, s

    def primitive(self):
        """Content-normalized copy with positive leading coefficient."""
        g, s = self.content_and_sign()
        if g in (0, 1) and s == 1:
            return self
        d = g * s
        return SparsePoly(self.nvars, {k: v // d for k, v in self.terms.items()})

    def canonical_key(self):
        """Stable identity key of the primitive part (term-sorted)."""
        p = self.primitive()
        return tuple(sorted(p.terms.items()))

    def divide_exact(self, d):
        """Exact division self / d w.r.t. lex order; None if not divisible.

        Divisor coefficients need not be units: intermediate arithmetic is
        rational, integrality of the quotient is checked at the end.
        """
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return SparsePoly(self.nvars)
        dlead = max(d.terms)
        dlc = d.terms[dlead]
        rest = [(k, v) for k, v in d.terms.items() if k != dlead]
        rem = {k: Fraction(v) for k, v in self.terms.items()}
        q = {}
        while rem:
            rlead = max(rem)
            rlc = rem.pop(rlead)
            diff = [x - y for x, y in zip(rlead, dlead)]
            if min(diff) < 0:
                return None
            e = bytes(diff)
            c = rlc / dlc
            q[e] = q.get(e, 0) + c
            for k, v in rest:
                kk = bytes(x + y for x, y in zip(e, k))
                nv = rem.get(kk, 0) - c * v
                if nv:
                    rem[kk] = nv
                elif kk in rem:
                    del rem[kk]
        out = {}
        for k, v in q.items():
            if v.denominator != 1:
                return None
            if v:
                out[k] = int(v)
        return SparsePoly(self.nvars, out)

    def eval_int(self, values):
        """Exact evaluation at integer (or Fraction) variable values."""
        total = 0
        for k, v in self.terms.items():
            t = v
            for i, e in enumerate(k):
                if e:
                    t *= values[i] ** e
            total += t
        return total

    def permute_columns(self, sigma, m, n):
        """Relabel column c -> sigma[c] (0-based) of the m x n variable grid."""
        out = {}
        for k, v in self.terms.items():
            e = bytearray(self.nvars)
            for idx, ex in enumerate(k):
                if ex:
                    r, c = divmod(idx, n)
                    e[r * n + sigma[c]] = ex
            out[bytes(e)] = v
        return SparsePoly(self.nvars, out)

    def __repr__(self):
        return f"SparsePoly({self.num_terms()} terms, deg {self.degree()})"


def minor_poly(m, n, cols):
    """Determinant of columns `cols` (1-based, strictly increasing) of the
    generic m x n matrix, by permutation expansion."""
    nvars = m * n
    terms = {}
    for perm in itertools.permutations(range(m)):
        s = perm_sign(perm)
        e = bytearray(nvars)
        for r, c in zip(perm, cols):
            e[r * n + (c - 1)] += 1
        terms[bytes(e)] = terms.get(bytes(e), 0) + s
    return SparsePoly(nvars, {k: v for k, v in terms.items() if v})


def det_int(rows):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]
