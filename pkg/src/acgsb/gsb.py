"""Compositions of inclusion, Gröbner-Shirshov basis checks, completion and
the word problem for finitely presented anti-commutative algebras."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .poly import Polynomial, make_monic
from .rewrite import Position, RelationSet, format_position, normal_form, substitute
from .words import Word, subwords

__all__ = [
    "Composition",
    "GSBReport",
    "RelationSet",
    "compositions",
    "iter_compositions",
    "is_gsb",
    "complete",
    "decide_equal",
    "in_ideal",
]


@dataclass(frozen=True)
class Composition:
    """``f - (g plugged into the leading word of f at position)``."""

    f_index: int
    g_index: int
    position: Position
    w: Word
    value: Polynomial

    def __str__(self):
        return (
            f"composition of relation {self.f_index + 1} with relation {self.g_index + 1} "
            f"at {format_position(self.position)} of {self.w}: {self.value}"
        )


class GSBReport(NamedTuple):
    ok: bool
    certificate: Composition | None = None
    remainder: Polynomial | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok


def iter_compositions(S: RelationSet) -> Iterator[Composition]:
    """All inclusion compositions of ``S``.

    Equal leading words between two distinct relations give a single
    composition at the root, taken with the lower index as ``f``.
    """
    degs = {w.degree for w in S.leading_words}
    for i, f in enumerate(S.relations):
        w = S.leading_word(i)
        for p, t in subwords(w):
            if t.degree not in degs:
                continue
            for j in S.index.get(t, ()):
                if j == i or (not p and j < i):
                    continue
                yield Composition(i, j, p, w, f - substitute(w, p, S.relations[j]))


def compositions(S: RelationSet) -> list[Composition]:
    return list(iter_compositions(S))


def is_gsb(S: RelationSet) -> GSBReport:
    """Check that every composition of ``S`` reduces to zero modulo ``S``."""
    n = 0
    for comp in iter_compositions(S):
        n += 1
        r = normal_form(comp.value, S)
        if r:
            return GSBReport(False, comp, r, n)
    return GSBReport(True, None, None, n)


def complete(S: RelationSet | list[Polynomial]) -> RelationSet:
    """Interreduce ``S`` until no member contains another member's leading word.

    The relation with the largest leading word among the reducible ones is
    rewritten first.  The result generates the same ideal, has no inclusion
    compositions and is therefore a Gröbner-Shirshov basis.  Members are
    returned in ascending order of leading word.
    """
    if not isinstance(S, RelationSet):
        S = RelationSet.normalized(S)
    rels = list(S.relations)
    while True:
        lead = [r.leading_word() for r in rels]
        target = None
        for i, r in enumerate(rels):
            if target is not None and lead[i].key <= lead[target].key:
                continue
            others = {w for j, w in enumerate(lead) if j != i}
            if any(_contains_any(m, others) for m in r._terms):
                target = i
        if target is None:
            break
        rest = RelationSet(rels[:target] + rels[target + 1:])
        r = normal_form(rels[target], rest)
        del rels[target]
        if r:
            r = make_monic(r)
            if r not in rels:
                rels.append(r)
    rels.sort(key=lambda r: r.leading_word().key)
    return RelationSet(rels)


def _contains_any(m: Word, words: set[Word]) -> bool:
    return any(t in words for _, t in subwords(m))


_completed: dict[RelationSet, RelationSet] = {}


def decide_equal(p: Polynomial, q: Polynomial, S: RelationSet | list[Polynomial]) -> bool:
    """Decide ``p == q`` in the algebra presented by ``S``.

    ``S`` is completed once and cached; equality is then equality of normal
    forms.
    """
    if not isinstance(S, RelationSet):
        S = RelationSet.normalized(S)
    done = _completed.get(S)
    if done is None:
        done = _completed[S] = complete(S)
    return normal_form(p, done) == normal_form(q, done)


def in_ideal(f: Polynomial, S: RelationSet | list[Polynomial]) -> bool:
    return decide_equal(f, Polynomial.zero(), S)
