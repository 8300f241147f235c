"""Exhaustive search for vertex-transitive dsrg(63,11,8,1,2) under L_2(8).

If L_2(8) acts transitively on the vertices with point stabilizer E_8,
the out-neighbourhood of the base vertex is a union of suborbits (orbits
of the stabilizer) not containing the base vertex, and the whole digraph
is the group orbit of the arcs leaving it.  Enumerating those unions and
testing each induced digraph finds every such dsrg.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .construction import BASE_POINT, ConstructionContext, ConstructionError, orient_orbit
from .digraph import Digraph, DsrgParams, verify_dsrg
from .isomorphism import canonical_form
from .permgroups import is_elementary_abelian_2, orbits_on_set, point_stabilizer

PARAMS = DsrgParams(63, 11, 8, 1, 2)


@dataclass(frozen=True, order=True)
class Candidate:
    orbit_indices: tuple[int, ...]
    points: tuple[int, ...] = field(compare=False)

    @property
    def total_size(self) -> int:
        return len(self.points)


def suborbits(ctx: ConstructionContext, base: int = BASE_POINT) -> list[list[int]]:
    """Orbits of the L_2(q) stabilizer of ``base``, sorted by (size, min)."""
    stab = point_stabilizer(ctx.group_small, base)
    q = ctx.field.q
    if stab.order != q or not is_elementary_abelian_2(stab):
        raise ConstructionError("vertex stabilizer is not elementary abelian of order q")
    orbs = orbits_on_set(stab, range(len(ctx.X)))
    if sorted(map(len, orbs)) != [1] * (q - 1) + [q] * (q - 1):
        raise ConstructionError(f"unexpected suborbit sizes {[len(o) for o in orbs]}")
    return orbs


def enumerate_candidates(orbits: list[list[int]], k: int = 11,
                         base: int = BASE_POINT) -> list[Candidate]:
    """Every union of orbits avoiding ``base`` with exactly ``k`` points."""
    usable = [i for i, o in enumerate(orbits) if base not in o]
    out = []
    for r in range(len(usable) + 1):
        for combo in combinations(usable, r):
            if sum(len(orbits[i]) for i in combo) == k:
                pts = sorted(x for i in combo for x in orbits[i])
                out.append(Candidate(combo, tuple(pts)))
    out.sort()
    return out


def induce_digraph(ctx: ConstructionContext, cand: Candidate,
                   base: int = BASE_POINT) -> Digraph:
    """The L_2(q)-orbit of the arcs from ``base`` into the candidate set."""
    pts = set(cand.points)
    if base in pts:
        raise ValueError("candidate contains the base vertex")
    stab = point_stabilizer(ctx.group_small, base)
    for g in stab.generators:
        if any(g.images[x] not in pts for x in pts):
            raise ConstructionError("candidate is not a union of suborbits")
    arcs = orient_orbit(ctx, ctx.group_small, base, cand.points)
    D = Digraph.from_arcs(len(ctx.X), arcs)
    assert all(d == len(pts) for d in D.adj.sum(axis=1))
    return D


@dataclass
class SearchResult:
    candidates: list[Candidate]
    survivors: list[tuple[Candidate, Digraph]]
    classes: list[list[int]]            # indices into survivors
    forms: list[bytes] = field(repr=False)

    @property
    def representatives(self) -> list[Digraph]:
        return [self.survivors[c[0]][1] for c in self.classes]


def search_all(ctx: ConstructionContext, params: DsrgParams = PARAMS) -> SearchResult:
    orbs = suborbits(ctx)
    cands = enumerate_candidates(orbs, params.k)
    survivors = []
    for cand in cands:
        D = induce_digraph(ctx, cand)
        if verify_dsrg(D, params).passed:
            survivors.append((cand, D))
    forms = [canonical_form(D) for _, D in survivors]
    by_form: dict[bytes, list[int]] = {}
    for i, f in enumerate(forms):
        by_form.setdefault(f, []).append(i)
    classes = sorted(by_form.values())
    return SearchResult(cands, survivors, classes, [forms[c[0]] for c in classes])
