"""Occurrences, substitution into tree contexts, and reduction modulo relations.

A position is a tuple of steps from the root, ``0`` = left child and
``1`` = right child; ``()`` is the whole word.  Plugging a polynomial into a
normal word at a position and renormalizing gives an *S-word* expanded as a
polynomial, which is how every elimination step is performed.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .poly import Polynomial, make_monic
from .words import Word, product, subwords

__all__ = [
    "Position",
    "RelationSet",
    "format_position",
    "subtree",
    "find_occurrences",
    "substitute",
    "reducible_site",
    "normal_form",
    "is_reduced",
]

Position = tuple  # of 0/1 steps


def format_position(p: Position) -> str:
    return "".join("LR"[s] for s in p) or "root"


def subtree(w: Word, position: Position) -> Word:
    for step in position:
        if w.left is None:
            raise IndexError(f"position {format_position(position)} leaves the word")
        w = w.right if step else w.left
    return w


def find_occurrences(pattern: Word, subject: Word) -> list[Position]:
    """Positions of ``pattern`` in ``subject`` in preorder (root first, L before R)."""
    if pattern.degree > subject.degree:
        return []
    return [p for p, t in subwords(subject) if t.degree == pattern.degree and t == pattern]


def substitute(subject: Word, position: Position, replacement: Polynomial) -> Polynomial:
    """Replace the subtree at ``position`` by ``replacement`` and expand.

    Only the ancestors of the position are renormalized; each may swap its
    children (flipping the sign) or vanish when both children coincide.
    """
    chain = []
    w = subject
    for step in position:
        if w.left is None:
            raise IndexError(f"position {format_position(position)} leaves {subject}")
        chain.append((step, w.left if step else w.right))
        w = w.right if step else w.left
    chain.reverse()
    out: dict[Word, object] = {}
    for m, c in replacement._terms.items():
        sign = 1
        cur = m
        for step, sib in chain:
            s, cur = product(sib, cur) if step else product(cur, sib)
            if not s:
                break
            sign *= s
        else:
            v = out.get(cur, 0) + (c if sign > 0 else -c)
            if v:
                out[cur] = v
            else:
                del out[cur]
    return Polynomial._raw(out)


class RelationSet:
    """Ordered collection of monic relations indexed by leading word.

    Members must be nonzero, monic and pairwise distinct; use
    :meth:`normalized` to make an arbitrary list comply.
    """

    def __init__(self, relations: Iterable[Polynomial] = ()):
        rels: list[Polynomial] = []
        seen = set()
        index: dict[Word, list[int]] = {}
        for r in relations:
            if not r:
                raise ValueError("relation sets cannot contain the zero polynomial")
            w, c = r.leading()
            if c != 1:
                raise ValueError(f"relation {r} is not monic")
            if r in seen:
                raise ValueError(f"duplicate relation {r}")
            seen.add(r)
            index.setdefault(w, []).append(len(rels))
            rels.append(r)
        self.relations: tuple[Polynomial, ...] = tuple(rels)
        self.index = index
        self._leading = tuple(r.leading_word() for r in rels)
        self._degrees = frozenset(w.degree for w in index)
        self._sites: dict[Word, tuple | None] = {}
        self._hash = None

    @classmethod
    def normalized(cls, polys: Iterable[Polynomial]) -> RelationSet:
        """Make monic, drop zeros and duplicates, keep first-seen order."""
        out = []
        seen = set()
        for p in polys:
            if not p:
                continue
            p = make_monic(p)
            if p not in seen:
                seen.add(p)
                out.append(p)
        return cls(out)

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __getitem__(self, i) -> Polynomial:
        return self.relations[i]

    def __eq__(self, other):
        if not isinstance(other, RelationSet):
            return NotImplemented
        return self.relations == other.relations

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.relations)
        return self._hash

    def __repr__(self):
        return "RelationSet([" + ", ".join(repr(str(r)) for r in self.relations) + "])"

    def leading_word(self, i: int) -> Word:
        return self._leading[i]

    @property
    def leading_words(self) -> tuple[Word, ...]:
        return self._leading

    def without(self, i: int) -> RelationSet:
        return RelationSet(r for j, r in enumerate(self.relations) if j != i)

    def max_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def max_index(self) -> int:
        return max((r.max_index() for r in self.relations), default=0)

    def is_homogeneous(self) -> bool:
        return all(r.is_homogeneous() for r in self.relations)

    def site(self, m: Word) -> tuple[Position, int] | None:
        """First reducible position of ``m`` in preorder and the lowest matching relation."""
        try:
            return self._sites[m]
        except KeyError:
            pass
        found = None
        if self.index:
            degs = self._degrees
            for p, t in subwords(m):
                if t.degree in degs:
                    hits = self.index.get(t)
                    if hits:
                        found = (p, hits[0])
                        break
        self._sites[m] = found
        return found


class _Desc:
    """Heap entry ordering words largest-first."""

    __slots__ = ("w",)

    def __init__(self, w):
        self.w = w

    def __lt__(self, other):
        return self.w.key > other.w.key


def reducible_site(m: Word, S: RelationSet):
    return S.site(m)


def is_reduced(w: Word, S: RelationSet) -> bool:
    """True iff no leading word of ``S`` occurs as a subtree of ``w`` (w in Red(S))."""
    return S.site(w) is None


def normal_form(
    f: Polynomial,
    S: RelationSet | Sequence[Polynomial],
    *,
    strategy: str = "largest",
    trace: list | None = None,
) -> Polynomial:
    """Fully reduce ``f`` by eliminations of leading words of ``S``.

    The default strategy always rewrites the largest reducible monomial, at
    its first reducible position in preorder, using the lowest-index
    relation.  ``strategy="smallest"`` rewrites the smallest reducible
    monomial instead; both agree whenever ``S`` is a Gröbner-Shirshov basis.
    If ``trace`` is a list, each step is appended as
    ``(coefficient, monomial, position, relation_index)``.
    """
    if not isinstance(S, RelationSet):
        S = RelationSet.normalized(S)
    if not S.relations or not f:
        return f
    if strategy == "largest":
        return _nf_largest(f, S, trace)
    if strategy == "smallest":
        return _nf_smallest(f, S, trace)
    raise ValueError(f"unknown strategy {strategy!r}")


def _nf_largest(f: Polynomial, S: RelationSet, trace) -> Polynomial:
    work = dict(f._terms)
    heap = [_Desc(w) for w in work]
    heapq.heapify(heap)
    queued = set(work)
    done: dict[Word, object] = {}
    while heap:
        m = heapq.heappop(heap).w
        queued.discard(m)
        c = work.pop(m, 0)
        if not c:
            continue
        hit = S.site(m)
        if hit is None:
            done[m] = c
            continue
        pos, j = hit
        if trace is not None:
            trace.append((c, m, pos, j))
        # m itself is the leading term of the plugged relation; skip it
        for w, v in substitute(m, pos, S.relations[j])._terms.items():
            if w == m:
                continue
            nv = work.get(w, 0) - c * v
            if nv:
                work[w] = nv
                if w not in queued:
                    queued.add(w)
                    heapq.heappush(heap, _Desc(w))
            else:
                work.pop(w, None)
    return Polynomial._raw(done)


def _nf_smallest(f: Polynomial, S: RelationSet, trace) -> Polynomial:
    work = dict(f._terms)
    while True:
        best = None
        for w in work:
            if S.site(w) is not None and (best is None or w.key < best.key):
                best = w
        if best is None:
            return Polynomial._raw(work)
        c = work[best]
        pos, j = S.site(best)
        if trace is not None:
            trace.append((c, best, pos, j))
        for w, v in substitute(best, pos, S.relations[j])._terms.items():
            nv = work.get(w, 0) - c * v
            if nv:
                work[w] = nv
            else:
                work.pop(w, None)
