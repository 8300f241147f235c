"""
The conic graph is an antipodal cover of a complete graph
=========================================================

Join two vertices when their normalized representatives have polar value
1.  For q = 4, 8, 16 this is distance-regular with intersection array
{q, q-2, 1; 1, 1, q}, and its distance-3 classes have size q - 1.
"""

from conicdsrg.construction import build_context, build_gamma, verify_bundle_structure
from conicdsrg.digraph import antipodal_partition, intersection_array
from conicdsrg.gf2e import FieldSpec

for e in (2, 3, 4):
    F = FieldSpec.default(e)
    gamma = build_gamma(F)
    b, c = intersection_array(gamma)
    classes = antipodal_partition(gamma)
    print(f"q={F.q:2d}: {gamma.n:3d} vertices, array {b};{c}, "
          f"{len(classes)} antipodal classes of size {len(classes[0])}")

# The stabilizer of a vertex p in L_2(q) fixes p's antipodal class
# pointwise and acts on the rest through the conics
# Q(p)Q(x) + c (x,p)^2 = 0, one orbit per nonzero c.
ctx = build_context(FieldSpec.default(3))
cert = verify_bundle_structure(ctx, 0)
print("bundle structure holds:", cert.passed)
for c, orb in cert.conic_orbits.items():
    print(f"  c={c}: {orb}")
