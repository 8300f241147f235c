"""
Every dsrg(63,11,8,1,2) with a transitive L_2(8)
================================================

The vertex stabilizer E_8 has seven fixed points and seven orbits of
size 8.  An out-neighbourhood of size 11 is one 8-orbit plus three fixed
points, so there are 140 candidates to try.
"""

import time

from conicdsrg.construction import build_context, build_delta
from conicdsrg.isomorphism import canonical_form
from conicdsrg.search import search_all, suborbits

ctx = build_context()
print("suborbit sizes:", [len(o) for o in suborbits(ctx)])

t0 = time.perf_counter()
res = search_all(ctx)
print(f"{len(res.candidates)} candidates, {len(res.survivors)} pass, "
      f"{len(res.classes)} classes ({time.perf_counter() - t0:.1f}s)")

named = {canonical_form(build_delta(ctx, c)): c for c in "AB"}
for cls, form in zip(res.classes, res.forms):
    print(f"class of size {len(cls)} is Delta_{named[form]}")
