# ### Normal words and the anti-commutative product
#
# Monomials of the free anti-commutative algebra are binary trees whose every
# node has a strictly larger left child.  Words are ordered degree first, then
# by left child, then by right child.

from acgsb import Polynomial, compare, enumerate_normal_words, gen, multiply, node, normalize
from acgsb.syntax import parse_expression, parse_tree

x1, x2, x3 = gen(1), gen(2), gen(3)

print("x1 vs x2:", compare(x1, x2))
print("x3 vs (x2 x1):", compare(x3, node(x2, x1)))

# Any bracketing normalizes to +word, -word or zero.
for text in ["(x1 x2)", "((x1 x1) x2)", "(x1 (x3 x2))"]:
    sign, w = normalize(parse_tree(text))
    print(f"{text:>14} ->", "0" if not sign else f"{'+' if sign > 0 else '-'}{w}")

# ### Counting normal words
#
# The number of normal words of degree n on two letters.

for n in range(1, 8):
    print(n, len(enumerate_normal_words(2, n)))

print("degree 4 on two letters:")
for w in enumerate_normal_words(2, 4):
    print("   ", w)

# ### Polynomials
#
# Coefficients are exact fractions.  ff = 0 for every f.

f = parse_expression("x3 - 2/3*(x2 x1) + x1")
g = parse_expression("x2")
print("f*g =", multiply(f, g))
print("g*f =", multiply(g, f))
print("f*f =", multiply(f, f))
print("leading word of f*g:", (f * g).leading_word())
print("as a dict:", Polynomial.word(node(x2, x1)).as_dict())
