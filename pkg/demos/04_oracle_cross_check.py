# ### Checking rewriting against plain linear algebra
#
# The oracle builds the ideal generated by a relation set up to a degree
# bound by multiplying relations by words and row-reducing exactly.  Its
# quotient dimensions must match the number of irreducible words for the
# completed set.

from acgsb import complete, enumerate_normal_words, materialize_s0, quotient_dimension, witt_dimension
from acgsb.syntax import parse_expression as P
from acgsb.words import subwords

print("S0 quotient dims:", quotient_dimension(materialize_s0(2, 6), 6, 2))
print("Witt dimensions: ", [witt_dimension(2, n) for n in range(1, 7)])

rels = [P("((x2 x1) x1) + 2*((x2 x1) x2)"), P("(((x2 x1) x2) x2) - (((x2 x1) x1) x1)")]
C = complete(rels)
print("completed:", [str(r) for r in C])

red = [
    sum(1 for w in enumerate_normal_words(2, n) if not any(t in C.index for _, t in subwords(w)))
    for n in range(1, 7)
]
print("oracle dims:      ", quotient_dimension(rels, 6, 2))
print("irreducible words:", red)
