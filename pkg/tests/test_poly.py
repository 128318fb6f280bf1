from fractions import Fraction

import pytest
from hypothesis import assume, given

from acgsb.poly import Polynomial, PrimeField, combine, leading, make_monic, multiply
from acgsb.syntax import parse_expression as P
from acgsb.syntax import parse_word as W
from acgsb.words import product
from gen import polys_st


def test_combine_examples():
    assert combine(1, P("x1"), 1, P("-x1")) == Polynomial.zero()
    assert combine(2, P("x1"), 0, P("(x3 x2) + x1")) == P("2*x1")
    assert combine(1, P("(x2 x1)"), 1, P("x1")) == Polynomial({W("(x2 x1)"): 1, W("x1"): 1})


def test_multiply_examples():
    assert multiply(P("x2 + x1"), P("x1")) == P("(x2 x1)")
    f = P("x3 - 2*(x2 x1) + x1")
    assert multiply(f, f).is_zero
    assert multiply(P("x1"), P("x2")) == Polynomial({W("(x2 x1)"): -1})


def test_leading_examples():
    assert leading(P("3*(x2 x1) + 5*x2")) == (W("(x2 x1)"), 3)
    assert leading(P("x1")) == (W("x1"), 1)
    assert leading(P("-2*((x2 x1) x2) + 7*((x2 x1) x1)")) == (W("((x2 x1) x2)"), -2)
    with pytest.raises(ValueError):
        leading(Polynomial.zero())


def test_make_monic():
    f = make_monic(P("3*(x2 x1) + x1"))
    assert f == P("(x2 x1) + 1/3*x1")


def test_no_zero_coefficients_stored():
    p = Polynomial([(W("x1"), 1), (W("x1"), -1), (W("x2"), 0)])
    assert p.is_zero and len(p) == 0 and str(p) == "0"


def test_terms_descending():
    p = P("x1 + ((x2 x1) x1) + (x2 x1) + x2")
    ws = [w for w, _ in p.terms()]
    assert ws == sorted(ws, reverse=True)


@given(polys_st(), polys_st())
def test_anticommutative_algebra(f, g):
    assert (multiply(f, g) + multiply(g, f)).is_zero


@given(polys_st(), polys_st())
def test_leading_word_of_product(f, g):
    assume(f and g)
    u, v = f.leading_word(), g.leading_word()
    assume(u != v)
    s, w = product(u, v)
    assert multiply(f, g).leading_word() == w


@given(polys_st(), polys_st(), polys_st())
def test_combine_laws(f, g, h):
    assert combine(1, f, 1, g) == combine(1, g, 1, f)
    assert combine(1, combine(1, f, 1, g), 1, h) == combine(1, f, 1, combine(1, g, 1, h))
    assert combine(1, f, 0, g) == f


@given(polys_st(), polys_st(), polys_st())
def test_bilinear(f, g, h):
    assert multiply(f + g, h) == multiply(f, h) + multiply(g, h)
    assert multiply(f.scale(Fraction(3, 2)), g) == multiply(f, g).scale(Fraction(3, 2))


def test_prime_field_coefficients():
    F = PrimeField(7)
    f = P("3*(x2 x1) + x1").map_coefficients(F)
    m = make_monic(f)
    assert m.leading()[1] == 1
    assert m.coefficient(W("x1")) == F(5)  # 1/3 = 5 mod 7
    assert multiply(f, f).is_zero
    g = P("x2").map_coefficients(F).scale(F(7))
    assert g.is_zero


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(9)
