"""Free Lie algebras inside the free anti-commutative algebra.

The Jacobi relations ``f_uvw = (uv)w - (uw)v - u(vw)`` over Hall words
``u > v > w`` form a Gröbner-Shirshov basis whose irreducible words are
exactly the Hall words.  Two routes to the Lie normal form are offered:

* :func:`lie_normal_form` rewrites schematically with :func:`hall_bracket`
  and works at any degree;
* :func:`materialize_s0` lists the relations up to a degree bound so the
  generic machinery in :mod:`acgsb.rewrite` and :mod:`acgsb.gsb` applies.
"""
from __future__ import annotations

from functools import lru_cache

from sympy import divisors, mobius

from .poly import Polynomial, make_monic, multiply
from .rewrite import RelationSet
from .words import Word, enumerate_normal_words, gen, node

__all__ = [
    "is_hall",
    "hall_words",
    "hall_words_upto",
    "witt_dimension",
    "jacobi_element",
    "jacobi_triples",
    "materialize_s0",
    "generic_jacobi_relations",
    "hall_bracket",
    "lie_bracket",
    "lie_normal_form",
]


def is_hall(w: Word) -> bool:
    """Hall condition: normal, and at each node ``((v1 v2) w)`` we have ``v2 <= w``."""
    if w.left is None:
        return True
    if not w.is_normal:
        return False
    v, r = w.left, w.right
    if v.left is not None and v.right.key > r.key:
        return False
    return is_hall(v) and is_hall(r)


@lru_cache(maxsize=None)
def hall_words(alphabet_size: int, degree: int) -> tuple[Word, ...]:
    """Hall words of exactly ``degree`` over x1..x_k, ascending."""
    if alphabet_size < 1 or degree < 1:
        raise ValueError("alphabet_size and degree must be >= 1")
    if degree == 1:
        return tuple(gen(i) for i in range(1, alphabet_size + 1))
    out = []
    for dl in range(degree - 1, 0, -1):
        dr = degree - dl
        if dl < dr:
            break
        rights = hall_words(alphabet_size, dr)
        for v in hall_words(alphabet_size, dl):
            for r in rights:
                if v.key <= r.key:
                    continue
                if v.left is not None and v.right.key > r.key:
                    continue
                out.append(node(v, r))
    out.sort(key=lambda w: w.key)
    return tuple(out)


def hall_words_upto(alphabet_size: int, max_degree: int) -> list[Word]:
    out: list[Word] = []
    for d in range(1, max_degree + 1):
        out.extend(hall_words(alphabet_size, d))
    return out


def witt_dimension(alphabet_size: int, degree: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on k letters."""
    if alphabet_size < 1 or degree < 1:
        raise ValueError("alphabet_size and degree must be >= 1")
    total = sum(int(mobius(d)) * alphabet_size ** (degree // d) for d in divisors(degree))
    q, r = divmod(total, degree)
    assert r == 0
    return q


def jacobi_element(u, v, w) -> Polynomial:
    """``(u v) w - (u w) v - u (v w)`` expanded in AC(X).

    Arguments may be words or polynomials.
    """
    u, v, w = (x if isinstance(x, Polynomial) else Polynomial.word(x) for x in (u, v, w))
    return multiply(multiply(u, v), w) - multiply(multiply(u, w), v) - multiply(u, multiply(v, w))


def jacobi_triples(words, max_degree: int):
    """Triples ``u > v > w`` drawn from ``words`` with total degree at most ``max_degree``."""
    ws = sorted(words, key=lambda t: t.key)
    n = len(ws)
    for a in range(n):
        w = ws[a]
        for b in range(a + 1, n):
            v = ws[b]
            if w.degree + v.degree + 1 > max_degree:
                break
            for c in range(b + 1, n):
                u = ws[c]
                if u.degree + v.degree + w.degree > max_degree:
                    break
                if u.key > v.key:
                    yield u, v, w


def materialize_s0(alphabet_size: int, max_degree: int) -> RelationSet:
    """Jacobi relations over Hall triples of total degree at most ``max_degree``.

    Relations come out ordered by leading word ``((u v) w)``.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    pool = hall_words_upto(alphabet_size, max(max_degree - 2, 1))
    rels = []
    for u, v, w in jacobi_triples(pool, max_degree):
        f = make_monic(jacobi_element(u, v, w))
        lead = node(node(u, v), w)
        if f.leading_word() != lead:
            raise AssertionError(f"unexpected leading word {f.leading_word()} for {lead}")
        rels.append(f)
    rels.sort(key=lambda r: r.leading_word().key)
    return RelationSet(rels)


def generic_jacobi_relations(alphabet_size: int, max_degree: int) -> list[Polynomial]:
    """Jacobi elements over all normal triples ``u > v > w`` (not completed)."""
    pool = []
    for d in range(1, max(max_degree - 2, 1) + 1):
        pool.extend(enumerate_normal_words(alphabet_size, d))
    return [jacobi_element(u, v, w) for u, v, w in jacobi_triples(pool, max_degree)]


@lru_cache(maxsize=None)
def hall_bracket(h1: Word, h2: Word) -> Polynomial:
    """Lie product of two Hall words, expanded in the Hall basis."""
    k1, k2 = h1.key, h2.key
    if k1 == k2:
        return Polynomial.zero()
    if k1 < k2:
        return -hall_bracket(h2, h1)
    if h1.left is None or h1.right.key <= k2:
        return Polynomial._raw({node(h1, h2): 1})
    # ((a b) c) = ((a c) b) + (a (b c)) with b > c
    a, b = h1.left, h1.right
    first = lie_bracket(hall_bracket(a, h2), Polynomial.word(b))
    second = lie_bracket(Polynomial.word(a), hall_bracket(b, h2))
    return first + second


def lie_bracket(p: Polynomial, q: Polynomial) -> Polynomial:
    """Bilinear extension of :func:`hall_bracket` to Hall-basis polynomials."""
    acc: dict[Word, object] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            for w, c in hall_bracket(u, v)._terms.items():
                x = acc.get(w, 0) + a * b * c
                if x:
                    acc[w] = x
                else:
                    del acc[w]
    return Polynomial._raw(acc)


@lru_cache(maxsize=None)
def _lie_word(w: Word) -> Polynomial:
    if w.left is None:
        return Polynomial._raw({w: 1})
    if is_hall(w):
        return Polynomial._raw({w: 1})
    return lie_bracket(_lie_word(w.left), _lie_word(w.right))


def lie_normal_form(f: Polynomial) -> Polynomial:
    """Express ``f`` modulo the Jacobi ideal in the Hall basis."""
    acc: dict[Word, object] = {}
    for w, c in f._terms.items():
        for h, d in _lie_word(w)._terms.items():
            x = acc.get(h, 0) + c * d
            if x:
                acc[h] = x
            else:
                del acc[h]
    return Polynomial._raw(acc)
