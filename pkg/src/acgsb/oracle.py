"""Brute-force linear algebra over degree-truncated pieces of AC(X).

Nothing here uses elimination of leading words: ideals are built by
multiplying relations by words and running exact Gaussian elimination on the
resulting vectors.  The results serve as an independent check of
:mod:`acgsb.rewrite` and :mod:`acgsb.gsb`.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

from .poly import Polynomial, multiply
from .rewrite import RelationSet
from .words import Word, count_normal_words, enumerate_normal_words

__all__ = ["IdealSpan", "ideal_span", "quotient_dimension"]


class IdealSpan:
    """Echelon basis of ``Id(S)`` intersected with degree <= ``degree_bound``.

    Rows are kept fully reduced and keyed by their pivot, the deg-lex largest
    word, so membership is a single reduction pass.
    """

    def __init__(self, alphabet_size: int, degree_bound: int, sound: bool = True):
        self.alphabet_size = alphabet_size
        self.degree_bound = degree_bound
        self.sound = sound
        self.rows: dict[Word, dict[Word, Fraction]] = {}
        self.saturated = False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def rank_in_degree(self, n: int) -> int:
        return sum(1 for w in self.rows if w.degree == n)

    def _reduce(self, vec: dict[Word, Fraction]) -> dict[Word, Fraction]:
        # rows are fully reduced, so one pass over the pivots present suffices
        vec = dict(vec)
        for w in [w for w in vec if w in self.rows]:
            c = vec[w]
            for u, a in self.rows[w].items():
                v = vec.get(u, 0) - c * a
                if v:
                    vec[u] = v
                else:
                    vec.pop(u, None)
        return vec

    def insert(self, p: Polynomial) -> Polynomial | None:
        """Add ``p`` to the span; return the new reduced row, or None if dependent."""
        vec = self._reduce(p._terms)
        if not vec:
            return None
        piv = max(vec, key=lambda t: t.key)
        c = vec[piv]
        vec = {w: a / c for w, a in vec.items()}
        for row in self.rows.values():
            a = row.get(piv)
            if a:
                for u, b in vec.items():
                    v = row.get(u, 0) - a * b
                    if v:
                        row[u] = v
                    else:
                        row.pop(u, None)
        self.rows[piv] = vec
        return Polynomial._raw(dict(vec))

    def contains(self, p: Polynomial) -> bool:
        return not self._reduce(p._terms)

    def reduce(self, p: Polynomial) -> Polynomial:
        return Polynomial._raw(self._reduce(p._terms))

    def basis(self) -> list[Polynomial]:
        return [Polynomial._raw(dict(self.rows[w])) for w in sorted(self.rows, key=lambda t: t.key)]


def ideal_span(S: RelationSet | list[Polynomial], D: int, alphabet_size: int | None = None) -> IdealSpan:
    """Saturate the relations under multiplication by words, within degree ``D``.

    A product is kept only when all of its monomials have degree <= ``D``.
    For homogeneous ``S`` this is exactly ``Id(S)`` up to degree ``D``; for
    inhomogeneous ``S`` elements whose high-degree parts cancel can be
    missed, which is reported through ``IdealSpan.sound``.
    """
    if not isinstance(S, RelationSet):
        S = RelationSet.normalized(S)
    if D < 1:
        raise ValueError("degree bound must be >= 1")
    k = alphabet_size if alphabet_size is not None else max(S.max_index(), 1)
    if S.max_index() > k:
        raise ValueError("relations use generators beyond the alphabet")
    sound = S.is_homogeneous() or D > S.max_degree()
    span = IdealSpan(k, D, sound)
    words_by_deg = {d: enumerate_normal_words(k, d) for d in range(1, D + 1)}
    todo = deque()
    for r in S:
        if r.degree() <= D:
            row = span.insert(r)
            if row is not None:
                todo.append(row)
    while todo:
        p = todo.popleft()
        room = D - p.degree()
        for d in range(1, room + 1):
            for x in words_by_deg[d]:
                q = multiply(p, Polynomial._raw({x: 1}))
                if q:
                    row = span.insert(q)
                    if row is not None:
                        todo.append(row)
    span.saturated = True
    return span


def quotient_dimension(
    S: RelationSet | list[Polynomial], D: int, alphabet_size: int | None = None
) -> list[int]:
    """Dimensions of the degree-1..D slices of ``AC(X)/Id(S)``.

    For inhomogeneous ``S`` these are the dimensions of the associated
    graded pieces of the degree filtration.
    """
    span = ideal_span(S, D, alphabet_size)
    k = span.alphabet_size
    return [count_normal_words(k, n) - span.rank_in_degree(n) for n in range(1, D + 1)]
