import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acgsb.gsb import is_gsb
from acgsb.lie import materialize_s0
from acgsb.oracle import ideal_span
from acgsb.poly import Polynomial
from acgsb.rewrite import (
    RelationSet,
    find_occurrences,
    is_reduced,
    normal_form,
    substitute,
    subtree,
)
from acgsb.syntax import parse_expression as P
from acgsb.syntax import parse_word as W
from acgsb.words import enumerate_normal_words, subwords
from gen import brute_subtrees, random_poly, replace_at, words_st

L, R = 0, 1


def test_find_occurrences_examples():
    subject = W("(((x2 x1) x2) x1)")
    brute = [p for p, t in brute_subtrees(subject) if t == W("(x2 x1)")]
    assert brute == [(L, L)]
    assert find_occurrences(W("(x2 x1)"), subject) == [(L, L)]
    assert find_occurrences(subject, subject) == [()]
    assert find_occurrences(W("(x3 x1)"), W("((x2 x1) x1)")) == []


@given(words_st(2, 6), words_st(2, 3))
def test_find_occurrences_matches_brute_scan(subject, pattern):
    assert find_occurrences(pattern, subject) == [p for p, t in brute_subtrees(subject) if t == pattern]


def test_substitute_examples():
    w = W("(((x2 x1) x2) x1)")
    assert substitute(w, (L, L), P("x1")) == Polynomial({W("((x2 x1) x1)"): -1})
    assert substitute(w, (L,), Polynomial.zero()).is_zero
    assert substitute(w, (L, L), Polynomial.word(subtree(w, (L, L)))) == P(str(w))


def test_substitute_invalid_position():
    with pytest.raises(IndexError):
        substitute(W("(x2 x1)"), (L, L), P("x1"))


@settings(max_examples=200)
@given(words_st(3, 6), st.data())
def test_substitute_agrees_with_full_renormalization(w, data):
    p = data.draw(st.sampled_from([p for p, _ in subwords(w)]))
    m = data.draw(words_st(3, 3))
    expected = Polynomial.from_tree(replace_at(w, p, m))
    assert substitute(w, p, Polynomial.word(m)) == expected


S1 = RelationSet([P("(x2 x1) - x1")])


def test_normal_form_examples():
    assert normal_form(P("((x2 x1) x1)"), S1).is_zero
    assert normal_form(P("(x2 x1) + x2"), S1) == P("x1 + x2")
    assert normal_form(P("x1"), S1) == P("x1")


def test_relation_set_validation():
    with pytest.raises(ValueError):
        RelationSet([P("2*x1")])
    with pytest.raises(ValueError):
        RelationSet([Polynomial.zero()])
    with pytest.raises(ValueError):
        RelationSet([P("x1"), P("x1")])
    S = RelationSet.normalized([P("2*x2 + x1"), Polynomial.zero(), P("x2 + 1/2*x1")])
    assert list(S) == [P("x2 + 1/2*x1")]


def test_trace_is_strictly_descending_and_sound():
    rng = random.Random(5)
    S = RelationSet.normalized([P("(x2 x1) - x1"), P("((x3 x1) x2) - (x3 x2)")])
    for _ in range(30):
        f = random_poly(rng, 3, 4)
        trace = []
        r = normal_form(f, S, trace=trace)
        # rebuild f - r from the recorded eliminations
        acc = Polynomial.zero()
        cur = f
        for c, m, pos, j in trace:
            assert cur.coefficient(m) == c
            step = substitute(m, pos, S[j]).scale(c)
            new = cur - step
            # multiset descent: m disappears and every other changed word is smaller
            changed = {w for w in set(new.support()) | set(cur.support()) if new[w] != cur[w]}
            assert m in changed and m not in new
            assert all(w < m for w in changed - {m})
            cur = new
            acc = acc + step
        assert cur == r
        assert f - r == acc
        # no irreducible word survives that contains a leading word
        assert all(is_reduced(w, S) for w in r.support())
        span = ideal_span(S, 5, 3)
        assert span.contains(f - r)


def test_red_characterization():
    S = materialize_s0(2, 5)
    for d in range(1, 6):
        for w in enumerate_normal_words(2, d):
            contains = any(t in S.index for _, t in subwords(w))
            assert (normal_form(Polynomial.word(w), S) == Polynomial.word(w)) == (not contains)


def test_strategy_independence_on_s0():
    S = materialize_s0(2, 6)
    assert is_gsb(S)
    rng = random.Random(11)
    for _ in range(100):
        f = random_poly(rng, 2, 6, terms=5)
        assert normal_form(f, S) == normal_form(f, S, strategy="smallest")

