"""Invariant atoms on configuration spaces and exact factorization.

An "atom" is an irreducible building block of the multiplicative group in
which symbol entries live:

  * minor atoms   -- Pluecker determinants <i1...im>, identified by their
                     sorted column tuple;
  * prime atoms   -- prime numbers, carrying the rational-constant content
                     of expressions (signs are dropped: we work mod torsion);
  * extra atoms   -- irreducible invariant polynomials that are not minors
                     (the paper-level computations discover a handful of
                     these, e.g. numerators of non-consecutive coordinate
                     differences).

Extra atoms are identified by an exact evaluation fingerprint: the vector of
values at a fixed seeded family of integer reference configurations,
normalized projectively (so scalar multiples of the same polynomial collide,
as they must mod torsion).  Two distinct polynomials of the degrees occurring
here agree on all reference configurations only with Schwartz-Zippel
probability far below 2**-200.

Factorization of the numerator of a difference of monomials never expands
the product polynomial: divisibility by a minor is detected by evaluating on
its zero variety, and the multiplicity is the valuation of the restriction
to a generic line through a generic point of that variety.
"""

import itertools
import random
from fractions import Fraction
from math import comb, gcd

from .sparsepoly import SparsePoly, det_int, minor_poly

MINOR, PRIME, EXTRA = 0, 1, 2

N_REF_CONFIGS = 6
_REF_BOX = 10 ** 6


class DegenerateMinor(ValueError):
    """Repeated column index: the determinant is identically zero."""


class ZeroNumerator(ValueError):
    """A difference vanished identically (degenerate identity)."""


class GenericConfig:
    """Shape of a configuration space: n generic vectors in m-space."""

    __slots__ = ("m", "n")

    def __init__(self, m, n):
        if not (n >= m >= 1):
            raise ValueError("need n >= m >= 1")
        self.m = m
        self.n = n

    def __repr__(self):
        return f"Conf({self.n},{self.m})"


def sort_with_sign(cols):
    """Sorted tuple and the sign of the sorting permutation."""
    cols = tuple(cols)
    if len(set(cols)) != len(cols):
        raise DegenerateMinor(cols)
    order = sorted(range(len(cols)), key=lambda i: cols[i])
    inv = 0
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if cols[i] > cols[j]:
                inv += 1
    return tuple(cols[i] for i in order), (-1) ** inv


class Atom:
    __slots__ = ("kind", "key", "id", "degree", "struct")

    def __init__(self, kind, key, id, degree, struct=None):
        self.kind = kind
        self.key = key          # minor: sorted col tuple; prime: int; extra: fingerprint
        self.id = id
        self.degree = degree
        self.struct = struct    # extra only: ("diff", itemsA, itemsB, removed_items)

    def __repr__(self):
        if self.kind == MINOR:
            return "<" + "".join(str(c % 10) for c in self.key) + ">"
        if self.kind == PRIME:
            return f"p{self.key}"
        return f"E{self.id}(deg {self.degree})"


class AtomRegistry:
    """All atoms of one configuration space, with stable ids.

    Minor atoms are pre-registered (id = position of the column tuple in
    lexicographic order), so their ids double as the ranks used by the
    vectorized group-orbit code.  Primes and extras are appended on demand.
    Registration is idempotent.
    """

    def __init__(self, m, n, seed=20240):
        self.m = m
        self.n = n
        self.atoms = []
        self.minor_ids = {}
        self.prime_ids = {}
        self.extra_ids = {}     # fingerprint -> id
        for cols in itertools.combinations(range(1, n + 1), m):
            a = Atom(MINOR, cols, len(self.atoms), m)
            self.atoms.append(a)
            self.minor_ids[cols] = a.id
        self.n_minors = len(self.atoms)
        rng = random.Random(seed)
        self.ref_configs = [self._rand_cfg(rng) for _ in range(N_REF_CONFIGS)]
        # minor values at the reference configurations, by minor id
        self.ref_minor_values = [
            [self._minor_det(cfg, self.atoms[i].key) for i in range(self.n_minors)]
            for cfg in self.ref_configs
        ]
        self._image_memo = {}
        self._minor_polys = {}

    # -- construction helpers -------------------------------------------------

    def _rand_cfg(self, rng):
        while True:
            cfg = [[rng.randrange(-_REF_BOX, _REF_BOX + 1) for _ in range(self.n)]
                   for _ in range(self.m)]
            if all(self._minor_det(cfg, cols) != 0
                   for cols in itertools.combinations(range(1, self.n + 1), self.m)):
                return cfg

    def _minor_det(self, cfg, cols):
        return det_int([[cfg[r][c - 1] for c in cols] for r in range(self.m)])

    # -- basic lookups --------------------------------------------------------

    def minor_atom(self, cols):
        """Atom for <cols> (any order); the sign of sorting is discarded."""
        scols, _ = sort_with_sign(cols)
        if any(not 1 <= c <= self.n for c in scols):
            raise ValueError(f"column out of range: {cols}")
        return self.atoms[self.minor_ids[scols]]

    def prime_atom(self, p):
        aid = self.prime_ids.get(p)
        if aid is None:
            a = Atom(PRIME, p, len(self.atoms), 0)
            self.atoms.append(a)
            self.prime_ids[p] = a.id
            aid = a.id
        return self.atoms[aid]

    def minor_poly(self, cols):
        p = self._minor_polys.get(cols)
        if p is None:
            p = minor_poly(self.m, self.n, cols)
            self._minor_polys[cols] = p
        return p

    # -- evaluation -----------------------------------------------------------

    def atom_value(self, aid, cfg):
        """Exact value of atom `aid` at an integer configuration."""
        a = self.atoms[aid]
        if a.kind == MINOR:
            return self._minor_det(cfg, a.key)
        if a.kind == PRIME:
            return a.key
        _, itemsA, itemsB, removed = a.struct
        num = self.items_value(itemsA, cfg) - self.items_value(itemsB, cfg)
        den = 1
        for mid, e in removed:
            den *= self.atom_value(mid, cfg) ** e
        if den == 0:
            raise ZeroDivisionError("degenerate configuration for extra atom")
        v = Fraction(num, den)
        return v

    def items_value(self, items, cfg):
        v = Fraction(1)
        for aid, e in items:
            av = self.atom_value(aid, cfg)
            if av == 0:
                if e > 0:
                    return Fraction(0)
                raise ZeroDivisionError("zero atom with negative exponent")
            v *= Fraction(av) ** e
        return v

    def ref_value(self, aid, k):
        """Value of atom `aid` at reference configuration k (cached for minors)."""
        a = self.atoms[aid]
        if a.kind == MINOR:
            return self.ref_minor_values[k][aid]
        if a.kind == PRIME:
            return a.key
        return self.atom_value(aid, self.ref_configs[k])

    # -- extra-atom registration ---------------------------------------------

    def fingerprint(self, values):
        """Projective, sign-normalized identity key from exact ref values."""
        pivot = next((i for i, v in enumerate(values) if v != 0), None)
        if pivot is None:
            raise ZeroNumerator("expression vanishes on all reference configs")
        pv = values[pivot]
        return (pivot,) + tuple(Fraction(v) / pv for v in values)

    def register_extra(self, struct, degree):
        """Idempotent registration of an extra atom given its defining struct.

        Returns (atom, lam) where lam is the exact scalar relating the new
        expression to the stored representative: new = lam * stored.
        """
        _, itemsA, itemsB, removed = struct
        values = []
        for k in range(N_REF_CONFIGS):
            cfg = self.ref_configs[k]
            num = self.items_value(itemsA, cfg) - self.items_value(itemsB, cfg)
            den = Fraction(1)
            for mid, e in removed:
                den *= Fraction(self.ref_value(mid, k)) ** e
            values.append(Fraction(num) / den)
        fp = self.fingerprint(values)
        aid = self.extra_ids.get((degree,) + fp)
        if aid is not None:
            stored = self.atoms[aid]
            k0 = fp[0]
            lam = values[k0] / self.ref_value(aid, k0)
            return stored, lam
        a = Atom(EXTRA, fp, len(self.atoms), degree, struct)
        self.atoms.append(a)
        self.extra_ids[(degree,) + fp] = a.id
        return a, Fraction(1)

    # -- the permutation action ----------------------------------------------

    def atom_image(self, aid, sigma):
        """Image atom id and scalar under the column relabeling c -> sigma[c-1].

        sigma is a tuple of length n over 1..n.  Minor atoms map by index
        substitution (sorting sign discarded, mod torsion); prime atoms are
        fixed; extra atoms map by relabeling their defining expression and
        re-identifying by fingerprint.  Returns (image_id, lam) with
        sigma(atom) = lam * stored_image (lam = +-1 times content drift; for
        minors and primes lam is always 1 since signs are dropped).
        """
        a = self.atoms[aid]
        if a.kind == MINOR:
            cols, _ = sort_with_sign(tuple(sigma[c - 1] for c in a.key))
            return self.minor_ids[cols], 1
        if a.kind == PRIME:
            return aid, 1
        memo_key = (aid, sigma)
        hit = self._image_memo.get(memo_key)
        if hit is not None:
            return hit
        _, itemsA, itemsB, removed = a.struct
        imgA = self._items_image(itemsA, sigma)
        imgB = self._items_image(itemsB, sigma)
        imgR = self._items_image(removed, sigma)
        img, lam = self.register_extra(("diff", imgA, imgB, imgR), a.degree)
        res = (img.id, lam)
        self._image_memo[memo_key] = res
        return res

    def _items_image(self, items, sigma):
        out = []
        for aid, e in items:
            iid, lam = self.atom_image(aid, sigma)
            if lam != 1 and lam != -1:
                # scalar drift inside a defining product would change the
                # fingerprint by a constant only; fold it into nothing since
                # fingerprints are projective
                pass
            out.append((iid, e))
        return tuple(sorted(out))

    def __len__(self):
        return len(self.atoms)

    def extra_atoms(self):
        return [a for a in self.atoms if a.kind == EXTRA]
