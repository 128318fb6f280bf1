# ### Relations, compositions and completion
#
# A set of monic relations is a Gröbner-Shirshov basis when every composition
# of inclusion reduces to zero.  Interreduction removes all inclusions, so any
# finite set can be turned into an equivalent basis.  That solves the word
# problem.

from acgsb import RelationSet, complete, compositions, decide_equal, is_gsb, normal_form
from acgsb.syntax import parse_expression as P

S = RelationSet([P("((x3 x2) x1) - x1"), P("(x3 x2) - x2")])
print("relations:")
for r in S:
    print("   ", r)

for c in compositions(S):
    print(c)

report = is_gsb(S)
print("is a Groebner-Shirshov basis:", report.ok)
print("obstruction:", report.remainder)

C = complete(S)
print("completed:")
for r in C:
    print("   ", r)
print("completed set is a basis:", is_gsb(C).ok)

# ### Deciding equality
#
# Two expressions are equal in the quotient iff their normal forms modulo the
# completed set agree.

T = RelationSet([P("(x2 x1) - x1")])
print("((x2 x1) x1) == 0 ?", decide_equal(P("((x2 x1) x1)"), P("0"), T))
print("x1 == x2 ?", decide_equal(P("x1"), P("x2"), T))
print("normal form of (x2 x1) + x2:", normal_form(P("(x2 x1) + x2"), T))

# A presentation that collapses everything.
print("complete({(x2 x1) - x1, (x2 x1) - x2}) =", [str(r) for r in complete([P("(x2 x1) - x1"), P("(x2 x1) - x2")])])
