"""Exact tensor algebra over the free abelian group on symbol atoms.

Symbol entries live in the multiplicative group of a function field modulo
torsion, so an entry is a Monomial: a finite map atom-id -> nonzero integer
exponent, with no sign component (a (x) (-b) = a (x) b).  Tensors of such
entries with rational coefficients are TensorWord / TensorSum.
"""

from fractions import Fraction


class Monomial:
    """Element of the free abelian group on atom ids (written multiplicatively).

    Immutable.  The empty monomial is the unit; a unit symbol slot means
    log 1 = 0 and kills the containing tensor word.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, items=()):
        merged = {}
        for a, e in items:
            ne = merged.get(a, 0) + e
            if ne:
                merged[a] = ne
            elif a in merged:
                del merged[a]
        self.items = tuple(sorted(merged.items()))
        self._hash = hash(self.items)

    @classmethod
    def unit(cls):
        return _UNIT

    @classmethod
    def atom(cls, a, e=1):
        if e == 0:
            return _UNIT
        m = object.__new__(cls)
        m.items = ((a, e),)
        m._hash = hash(m.items)
        return m

    def is_unit(self):
        return not self.items

    def mul(self, other, exponent=1):
        """self * other**exponent with zero exponents removed."""
        if exponent == 0 or not other.items:
            return self
        if not self.items:
            return other if exponent == 1 else Monomial(
                (a, e * exponent) for a, e in other.items)
        return Monomial(list(self.items)
                        + [(a, e * exponent) for a, e in other.items])

    def inv(self):
        return Monomial((a, -e) for a, e in self.items)

    def exponent(self, a):
        for b, e in self.items:
            if b == a:
                return e
        return 0

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.items:
            return "1"
        return "*".join(f"a{a}^{e}" if e != 1 else f"a{a}"
                        for a, e in self.items)


_UNIT = Monomial()


def mono_combine(a, b, exponent):
    """a * b**exponent (module-level alias kept for the public surface)."""
    return a.mul(b, exponent)


class TensorWord:
    """Fixed-weight tensor of Monomials.  weight = number of slots >= 1.

    A word with a unit slot is identified with zero; the `make` factory
    returns None in that case so callers can drop it.
    """

    __slots__ = ("slots", "_hash")

    def __init__(self, slots):
        self.slots = tuple(slots)
        self._hash = hash(self.slots)

    @classmethod
    def make(cls, slots):
        slots = tuple(slots)
        if not slots:
            raise ValueError("weight must be >= 1")
        for s in slots:
            if s.is_unit():
                return None
        return cls(slots)

    @property
    def weight(self):
        return len(self.slots)

    def concat(self, other):
        return TensorWord(self.slots + other.slots)

    def __eq__(self, other):
        return isinstance(other, TensorWord) and self.slots == other.slots

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return " (x) ".join(map(repr, self.slots))


class TensorSum:
    """Q-linear combination of equal-weight TensorWords, merge-with-cancel."""

    __slots__ = ("terms", "weight")

    def __init__(self, weight, terms=None):
        self.weight = weight
        self.terms = {}
        if terms:
            for w, c in terms:
                self.add_word(w, c)

    @classmethod
    def zero(cls, weight):
        return cls(weight)

    @classmethod
    def from_word(cls, slots, coeff=1):
        """Single-word sum; drops the word if a slot is a unit monomial."""
        t = cls(len(tuple(slots)))
        w = TensorWord.make(slots)
        if w is not None:
            t.add_word(w, coeff)
        return t

    def add_word(self, word, coeff):
        if word is None or coeff == 0:
            return
        if word.weight != self.weight:
            raise ValueError("mixed weights in TensorSum")
        c = self.terms.get(word, 0) + coeff
        if c:
            self.terms[word] = c
        elif word in self.terms:
            del self.terms[word]

    def iadd(self, other, scale=1):
        if other.weight != self.weight and other.terms:
            raise ValueError("mixed weights in TensorSum")
        for w, c in other.terms.items():
            self.add_word(w, c * scale)
        return self

    def __add__(self, other):
        out = TensorSum(self.weight)
        out.terms = dict(self.terms)
        return out.iadd(other)

    def __sub__(self, other):
        out = TensorSum(self.weight)
        out.terms = dict(self.terms)
        return out.iadd(other, -1)

    def scale(self, c):
        out = TensorSum(self.weight)
        if c:
            out.terms = {w: v * c for w, v in self.terms.items()}
        return out

    def tensor(self, other):
        """Concatenation product, bilinear."""
        out = TensorSum(self.weight + other.weight)
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                out.add_word(wa.concat(wb), ca * cb)
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, TensorSum)
                and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})[{w!r}]" for w, c in self.terms.items())


def wedge_odot(a, b, mode):
    """a^b = a(x)b - b(x)a  or  a.b = a(x)b + b(x)a, distributed bilinearly."""
    if mode not in ("wedge", "odot"):
        raise ValueError(f"unknown mode {mode!r}")
    sign = -1 if mode == "wedge" else 1
    return a.tensor(b).iadd(b.tensor(a), sign)


def pi_tilde_word(word):
    """Projector recursion on a single word:

        P_1 = id,
        P_N(a_1...a_N) = P_{N-1}(a_1...a_{N-1}) (x) a_N
                       - P_{N-1}(a_2...a_N)     (x) a_1.

    Kills shuffle products; output weight = input weight.
    """
    slots = word.slots
    n = len(slots)
    if n == 1:
        return TensorSum.from_word(slots)
    # iterative expansion over the 2^(N-1) bracketings
    out = TensorSum(n)
    stack = [(0, n - 1, 1, ())]  # (i, j, coeff, tail slots appended so far)
    while stack:
        i, j, c, tail = stack.pop()
        if i == j:
            out.add_word(TensorWord.make((slots[i],) + tail), c)
            continue
        stack.append((i, j - 1, c, (slots[j],) + tail))
        stack.append((i + 1, j, -c, (slots[i],) + tail))
    return out


def pi_tilde(x):
    """Linear extension of pi_tilde_word to TensorSums (accepts both)."""
    if isinstance(x, TensorWord):
        return pi_tilde_word(x)
    out = TensorSum(x.weight)
    for w, c in x.terms.items():
        out.iadd(pi_tilde_word(w), c)
    return out


def shuffle_product(a, b):
    """Shuffle product of two TensorSums (used by tests; the projector
    annihilates its image)."""
    out = TensorSum(a.weight + b.weight)
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            for w in _shuffles(wa.slots, wb.slots):
                out.add_word(TensorWord.make(w), ca * cb)
    return out


def _shuffles(u, v):
    if not u:
        yield v
        return
    if not v:
        yield u
        return
    for w in _shuffles(u[1:], v):
        yield (u[0],) + w
    for w in _shuffles(u, v[1:]):
        yield (v[0],) + w


def as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)
