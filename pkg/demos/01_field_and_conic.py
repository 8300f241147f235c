"""
Binary fields and the conic with its nucleus
=============================================

Build GF(8), look at its square roots, and list the 63 points of PG(2,8)
that become the vertices of the conic graph.
"""

from conicdsrg.geometry import (
    NUCLEUS,
    conic_points,
    normalize,
    quadratic_form,
    vertex_set,
)
from conicdsrg.gf2e import FieldSpec

F = FieldSpec.parse("e=3,mod=0xb")
print(F, "has", F.q, "elements")

# In characteristic 2 squaring is a bijection, so every element has
# exactly one square root.
for a in F.elements():
    print(f"sqrt({a}) = {F.sqrt(a)}   check: {F.mul(F.sqrt(a), F.sqrt(a))}")

# Q(x) = x0 x2 + x1^2.  The conic is {(1,t,t^2)} plus (0,0,1); the
# nucleus (0,1,0) is nonsingular but lies on every tangent.
print("conic:", conic_points(F))
print("Q(nucleus) =", quadratic_form(F, NUCLEUS))

# Every nonsingular point has one representative with Q = 1.
print("normalize((1,0,2)) =", normalize(F, (1, 0, 2)))

X = vertex_set(F)
print(len(X), "vertices; first few:")
print("".join(X.format().splitlines(keepends=True)[:5]))
