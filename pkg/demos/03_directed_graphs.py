"""
Two directed strongly regular graphs on 63 vertices
===================================================

Orient one of the two orbits of antipodes of a base vertex, spread the
arcs around with PSigmaL(2,8), and check A^2 = 8I + A + 2(J - I - A).
"""

from conicdsrg.construction import antipode_split, build_context, build_delta
from conicdsrg.digraph import DsrgParams, stable_partition_from_base, transpose, verify_dsrg
from conicdsrg.isomorphism import (
    aut_structure_report,
    automorphism_group,
    canonical_form,
    find_isomorphism,
)

ctx = build_context()
print("|L_2(8)| =", ctx.group_small.order, " |PSigmaL(2,8)| =", ctx.group_full.order)
print("antipode orbits of vertex 0:", antipode_split(ctx, 0))

params = DsrgParams(63, 11, 8, 1, 2)
A = build_delta(ctx, "A")
B = build_delta(ctx, "B")
print(verify_dsrg(A, params))
print(verify_dsrg(B, params))

# The two graphs are not isomorphic, yet reversing every arc of one gives
# the other.
print("A ~ B:", canonical_form(A) == canonical_form(B))
print("B ~ A^T:", find_isomorphism(B, transpose(A)) is not None)

# Individualizing a vertex splits the rest into cells 3, 3, 8, 24, 24.
print("cells from vertex 0:", stable_partition_from_base(A, 0))

G = automorphism_group(A)
print("Aut(A):", aut_structure_report(G))
