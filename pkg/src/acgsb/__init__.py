"""Gröbner-Shirshov bases for free anti-commutative algebras and free Lie
algebras in the Hall basis."""
from .words import (
    Word,
    compare,
    count_normal_words,
    enumerate_normal_words,
    gen,
    node,
    normalize,
    product,
)
from .poly import Polynomial, PrimeField, combine, leading, make_monic, multiply
from .rewrite import RelationSet, find_occurrences, normal_form, subtree, substitute
from .gsb import Composition, complete, compositions, decide_equal, is_gsb
from .lie import (
    hall_bracket,
    hall_words,
    is_hall,
    lie_normal_form,
    materialize_s0,
    witt_dimension,
)
from .oracle import ideal_span, quotient_dimension
from .syntax import ParseError, parse_expression, parse_relations, parse_tree, parse_word

__version__ = "0.1.0"
