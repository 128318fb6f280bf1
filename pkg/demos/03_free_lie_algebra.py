# ### The free Lie algebra inside AC(X)
#
# Adding the Jacobi relations over Hall words turns the free anti-commutative
# algebra into the free Lie algebra.  Those relations are already a
# Gröbner-Shirshov basis, so the irreducible words, the Hall words, form a
# linear basis.

from acgsb import hall_bracket, hall_words, is_gsb, lie_normal_form, materialize_s0, normal_form, witt_dimension
from acgsb.syntax import parse_expression as P
from acgsb.syntax import parse_word as W

print("n  #Hall(k=2)  Witt(2,n)")
for n in range(1, 11):
    print(f"{n:<3}{len(hall_words(2, n)):<12}{witt_dimension(2, n)}")

print("Hall words of degree 4 on two letters:")
for w in hall_words(2, 4):
    print("   ", w)

S0 = materialize_s0(3, 6)
print(f"S0 truncated at degree 6 on 3 letters: {len(S0)} relations, basis: {is_gsb(S0).ok}")

# ### Lie normal forms
#
# The Hall bracket rewrites products schematically, at any degree, and agrees
# with reduction by the materialized relations.

f = P("(((x2 x1) x2) x1)")
print("Lie normal form of", f, "=", lie_normal_form(f))
print("same via materialized S0:", normal_form(f, materialize_s0(2, 4)))

jacobi = P("((x3 x2) x1) - ((x3 x1) x2) + ((x2 x1) x3)")
print("Jacobi element reduces to", lie_normal_form(jacobi))

print("[((x2 x1) x2), x1] =", hall_bracket(W("((x2 x1) x2)"), W("x1")))
print("[x1, ((x3 x2) x1)] =", hall_bracket(W("x1"), W("((x3 x2) x1)")))
big = P("((((x3 x1) x2) (x2 x1)) x3)")
print("degree-6 word in the Hall basis:", lie_normal_form(big))
