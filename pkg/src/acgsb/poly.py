"""Polynomials of the free anti-commutative algebra with exact coefficients.

Coefficients default to :class:`fractions.Fraction`.  A prime field is
available through :class:`PrimeField`; its elements mix with plain ints.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .words import Word, gen, product

__all__ = ["Polynomial", "PrimeField", "ModP", "combine", "multiply", "leading", "make_monic"]


class ModP:
    """An element of Z/p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"


class PrimeField:
    """Factory for elements of Z/p; ``PrimeField(7)(3)`` is 3 mod 7."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, v) -> ModP:
        if isinstance(v, ModP):
            return v
        if isinstance(v, Fraction):
            return ModP(v.numerator * pow(v.denominator, -1, self.p), self.p)
        return ModP(int(v), self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Polynomial:
    """Finite linear combination of normal words, zero coefficients pruned.

    Treat instances as immutable.  ``*`` with another polynomial is the
    algebra product, ``*`` with a scalar scales.  Terms iterate in descending
    deg-lex order.
    """

    __slots__ = ("_terms", "_hash", "_sorted")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Word, object] = {}
        for w, c in items:
            if not w.is_normal:
                raise ValueError(f"{w} is not a normal word; use Polynomial.from_tree")
            c = d.get(w, 0) + _coerce(c)
            if c:
                d[w] = c
            else:
                d.pop(w, None)
        self._terms = d
        self._hash = None
        self._sorted = None

    @classmethod
    def _raw(cls, d: dict) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = d
        p._hash = None
        p._sorted = None
        return p

    @classmethod
    def from_tree(cls, t: Word, coeff=1) -> Polynomial:
        """``coeff * t`` for an arbitrary bracketing ``t``, normalized."""
        from .words import normalize

        s, w = normalize(t)
        if not s or not coeff:
            return cls.zero()
        return cls._raw({w: _coerce(coeff) * s})

    @classmethod
    def word(cls, w: Word, coeff=1) -> Polynomial:
        return cls.from_tree(w, coeff)

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def generator(cls, i: int) -> Polynomial:
        return cls._raw({gen(i): Fraction(1)})

    # -- mapping-ish access

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, w):
        return w in self._terms

    def __getitem__(self, w: Word):
        return self._terms.get(w, 0)

    def coefficient(self, w: Word):
        return self._terms.get(w, 0)

    def support(self) -> list[Word]:
        return [w for w, _ in self.terms()]

    def terms(self) -> list[tuple[Word, object]]:
        """``(word, coefficient)`` pairs, largest word first."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda t: t[0].key, reverse=True)
        return self._sorted

    def __iter__(self) -> Iterator[tuple[Word, object]]:
        return iter(self.terms())

    def as_dict(self) -> dict[Word, object]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(w.degree for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len({w.degree for w in self._terms}) <= 1

    def max_index(self) -> int:
        return max((w.max_index() for w in self._terms), default=0)

    # -- arithmetic

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((w, c) for w, c in self._terms.items()))
        return self._hash

    def __neg__(self):
        return Polynomial._raw({w: -c for w, c in self._terms.items()})

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return combine(1, self, 1, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return combine(1, self, -1, other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(other, self)
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({w: v * c for w, v in self._terms.items()})

    def leading(self) -> tuple[Word, object]:
        return leading(self)

    def leading_word(self) -> Word:
        return leading(self)[0]

    def monic(self) -> Polynomial:
        return make_monic(self)

    def map_coefficients(self, fn) -> Polynomial:
        d = {}
        for w, c in self._terms.items():
            c = fn(c)
            if c:
                d[w] = c
        return Polynomial._raw(d)

    def __str__(self):
        from .syntax import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def combine(c1, f: Polynomial, c2, g: Polynomial) -> Polynomial:
    """``c1*f + c2*g`` with cancellations pruned."""
    d: dict[Word, object] = {}
    if c1:
        for w, c in f._terms.items():
            d[w] = c * c1
    if c2:
        for w, c in g._terms.items():
            v = d.get(w, 0) + c * c2
            if v:
                d[w] = v
            else:
                d.pop(w, None)
    return Polynomial._raw(d)


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Bilinear extension of the anti-commutative product of normal words."""
    d: dict[Word, object] = {}
    for u, a in f._terms.items():
        for v, b in g._terms.items():
            s, w = product(u, v)
            if not s:
                continue
            c = d.get(w, 0) + (a * b if s > 0 else -(a * b))
            if c:
                d[w] = c
            else:
                del d[w]
    return Polynomial._raw(d)


def leading(f: Polynomial) -> tuple[Word, object]:
    """Deg-lex largest word of ``f`` and its coefficient."""
    if not f._terms:
        raise ValueError("zero polynomial has no leading term")
    w = max(f._terms, key=lambda t: t.key)
    return w, f._terms[w]


def make_monic(f: Polynomial) -> Polynomial:
    w, c = leading(f)
    if c == 1:
        return f
    return f.scale(1 / c)
