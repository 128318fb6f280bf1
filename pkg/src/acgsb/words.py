"""Non-associative words over an ordered alphabet x1 < x2 < ...

A :class:`Word` is an immutable binary tree.  Leaves are generators, inner
nodes are bracketings ``(l r)``.  Every word carries its degree (number of
leaves), a sort key realising the deg-lex order, and a flag telling whether
it is *normal*: every node has its left child strictly greater than its right
child.  Normal words are the monomials of the free anti-commutative algebra.

Nodes are hash-consed, so building the same tree twice yields the same
object.  Equality is still structural (it compares keys), identity is only a
fast path.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

__all__ = [
    "Word",
    "gen",
    "node",
    "compare",
    "normalize",
    "product",
    "is_normal",
    "enumerate_normal_words",
    "count_normal_words",
    "normal_words_upto",
    "subwords",
    "leaves",
]

LESS, EQUAL, GREATER = -1, 0, 1


class Word:
    """Binary tree word; use :func:`gen` and :func:`node` to build one."""

    __slots__ = ("left", "right", "index", "degree", "key", "is_normal", "_hash", "__weakref__")

    left: "Word | None"
    right: "Word | None"
    index: int
    degree: int
    key: tuple
    is_normal: bool

    def __init__(self, left, right, index, degree, key, normal):
        self.left = left
        self.right = right
        self.index = index
        self.degree = degree
        self.key = key
        self.is_normal = normal
        if left is None:
            self._hash = hash(("x", index))
        else:
            self._hash = hash((degree, left._hash, right._hash))

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __lt__(self, other: Word) -> bool:
        return self.key < other.key

    def __le__(self, other: Word) -> bool:
        return self.key <= other.key

    def __gt__(self, other: Word) -> bool:
        return self.key > other.key

    def __ge__(self, other: Word) -> bool:
        return self.key >= other.key

    def __str__(self):
        if self.left is None:
            return f"x{self.index}"
        return f"({self.left} {self.right})"

    def __repr__(self):
        return f"Word({self})"

    def __reduce__(self):
        if self.left is None:
            return gen, (self.index,)
        return node, (self.left, self.right)

    def max_index(self) -> int:
        """Largest generator index occurring in the word."""
        if self.left is None:
            return self.index
        return max(self.left.max_index(), self.right.max_index())


_leaves: dict[int, Word] = {}
_nodes: dict[tuple[Word, Word], Word] = {}


def gen(i: int) -> Word:
    """The generator ``x_i`` (``i >= 1``)."""
    try:
        return _leaves[i]
    except KeyError:
        pass
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"generator index must be a positive integer, got {i!r}")
    w = _leaves[i] = Word(None, None, i, 1, (1, i), True)
    return w


def node(left: Word, right: Word) -> Word:
    """The bracketing ``(left right)``; normality is computed, not enforced."""
    k = (left, right)
    try:
        return _nodes[k]
    except KeyError:
        pass
    deg = left.degree + right.degree
    normal = left.is_normal and right.is_normal and left.key > right.key
    w = _nodes[k] = Word(left, right, 0, deg, (deg, left.key, right.key), normal)
    return w


def is_normal(w: Word) -> bool:
    return w.is_normal


def compare(u: Word, v: Word) -> int:
    """Deg-lex comparison: -1, 0 or 1.

    Degree decides first; words of equal degree > 1 compare their left
    children, then their right children; letters compare by index.
    """
    if u is v:
        return EQUAL
    a, b = u.key, v.key
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


def product(u: Word, v: Word) -> tuple[int, Word | None]:
    """Product of two normal words as ``(sign, word)``; ``(0, None)`` if zero."""
    if u.key > v.key:
        return 1, node(u, v)
    if u.key < v.key:
        return -1, node(v, u)
    return 0, None


def normalize(t: Word) -> tuple[int, Word | None]:
    """Rewrite an arbitrary bracketing as ``sign * normal word``, or zero.

    >>> normalize(node(gen(1), gen(2)))
    (-1, Word((x2 x1)))
    """
    if t.is_normal:
        return 1, t
    ls, lw = normalize(t.left)
    if not ls:
        return 0, None
    rs, rw = normalize(t.right)
    if not rs:
        return 0, None
    s, w = product(lw, rw)
    return ls * rs * s, w


def subwords(w: Word, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], Word]]:
    """Yield ``(position, subtree)`` in preorder, left child before right.

    A position is a tuple of steps, 0 for the left child and 1 for the right.
    """
    stack = [(path, w)]
    while stack:
        p, t = stack.pop()
        yield p, t
        if t.left is not None:
            stack.append((p + (1,), t.right))
            stack.append((p + (0,), t.left))


def leaves(w: Word) -> list[int]:
    """Generator indices read left to right (the underlying associative word)."""
    if w.left is None:
        return [w.index]
    return leaves(w.left) + leaves(w.right)


def _check_sizes(alphabet_size: int, degree: int) -> None:
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    if degree < 1:
        raise ValueError("degree must be >= 1")


@lru_cache(maxsize=None)
def enumerate_normal_words(alphabet_size: int, degree: int) -> tuple[Word, ...]:
    """All normal words of exactly ``degree`` over x1..x_k, ascending."""
    _check_sizes(alphabet_size, degree)
    if degree == 1:
        return tuple(gen(i) for i in range(1, alphabet_size + 1))
    out = []
    for dl in range(degree - 1, (degree - 1) // 2, -1):
        dr = degree - dl
        if dl < dr:
            break
        lefts = enumerate_normal_words(alphabet_size, dl)
        rights = enumerate_normal_words(alphabet_size, dr)
        for a in lefts:
            for b in rights:
                if a.key > b.key:
                    out.append(node(a, b))
    out.sort(key=lambda w: w.key)
    return tuple(out)


def count_normal_words(alphabet_size: int, degree: int) -> int:
    """Number of normal words via the recurrence, without building them."""
    _check_sizes(alphabet_size, degree)
    a = [0, alphabet_size]
    for n in range(2, degree + 1):
        total = sum(a[i] * a[n - i] for i in range(n - 1, n // 2, -1) if i > n - i)
        if n % 2 == 0:
            h = a[n // 2]
            total += h * (h - 1) // 2
        a.append(total)
    return a[degree]


def normal_words_upto(alphabet_size: int, max_degree: int) -> list[Word]:
    """Normal words of degree 1..max_degree, ascending."""
    out: list[Word] = []
    for d in range(1, max_degree + 1):
        out.extend(enumerate_normal_words(alphabet_size, d))
    return out
