"""The conic graph Gamma, its groups, and the two directed graphs on 63
vertices obtained by orienting one antipodal orbit.

SL(2, q) acts on the conic through the parametrization
(s:t) -> (s^2 : st : t^2): the matrix [[a, b], [c, d]] induces the 3x3
matrix [[a^2, 0, b^2], [ac, ad+bc, bd], [c^2, 0, d^2]], which scales Q by
(ad+bc)^2 and fixes the nucleus, so it permutes the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .digraph import Digraph, degrees
from .geometry import (
    VertexSet,
    bilinear_form,
    bundle_conic,
    perp_conic_point,
    quadratic_form,
    vertex_set,
)
from .gf2e import FieldSpec
from .permgroups import PermGroup, Permutation, orbits_on_set, point_stabilizer

GF8 = FieldSpec.default(3)
BASE_POINT = 0


class ConstructionError(AssertionError):
    """A computed structure contradicts what the construction guarantees."""


def build_gamma(F: FieldSpec) -> Digraph:
    """Vertices <x>, <y> adjacent iff (xbar, ybar) = 1."""
    X = vertex_set(F)
    n = len(X)
    a = np.zeros((n, n), dtype=np.uint8)
    for i, x in enumerate(X):
        for j in range(i + 1, n):
            if bilinear_form(F, x, X[j]) == 1:
                a[i, j] = a[j, i] = 1
    # same relation on unnormalized representatives: (x,y)^2 = Q(x)Q(y)
    reps = [_first_one(F, x) for x in X]
    b = np.zeros_like(a)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            if i != j:
                xy = bilinear_form(F, x, y)
                b[i, j] = F.mul(xy, xy) == F.mul(quadratic_form(F, x), quadratic_form(F, y))
    if not np.array_equal(a, b):
        raise ConstructionError("the two adjacency criteria disagree")
    return Digraph(a)


def gamma_intersection_array(q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Intersection array of Gamma: an antipodal (q-1)-cover of K_{q+1}
    with c_2 = 1."""
    return (q, q - 2, 1), (1, 1, q)


def _first_one(F: FieldSpec, x):
    lead = next(c for c in x if c)
    s = F.inv(lead)
    return tuple(F.mul(s, c) for c in x)


def veronese_matrix(F: FieldSpec, m) -> list[list[int]]:
    (a, b), (c, d) = m
    sq = F.frobenius
    return [[sq(a), 0, sq(b)],
            [F.mul(a, c), F.mul(a, d) ^ F.mul(b, c), F.mul(b, d)],
            [sq(c), 0, sq(d)]]


def _apply(F: FieldSpec, M, x):
    return tuple(F.mul(M[r][0], x[0]) ^ F.mul(M[r][1], x[1]) ^ F.mul(M[r][2], x[2])
                 for r in range(3))


def veronese_permutation(F: FieldSpec, m, gamma: Digraph | None = None) -> Permutation:
    """Vertex permutation induced by the invertible 2x2 matrix ``m``."""
    (a, b), (c, d) = m
    det = F.mul(a, d) ^ F.mul(b, c)
    if det == 0:
        raise ValueError("matrix is singular")
    M = veronese_matrix(F, m)
    X = vertex_set(F)
    scale = F.mul(det, det)
    images = []
    for x in X:
        y = _apply(F, M, x)
        if quadratic_form(F, y) != F.mul(scale, quadratic_form(F, x)):
            raise ConstructionError("Veronese image does not rescale Q by det^2")
        images.append(X.locate(y))
    g = Permutation(tuple(images))
    if gamma is not None and not gamma.is_invariant_under(g.images):
        raise ConstructionError("Veronese image does not preserve Gamma")
    return g


def frobenius_permutation(F: FieldSpec) -> Permutation:
    X = vertex_set(F)
    return Permutation(tuple(X.locate(tuple(F.frobenius(c) for c in x)) for x in X))


def sl2_generators(F: FieldSpec) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    g = F.primitive_element()
    return [((1, 1), (0, 1)), ((0, 1), (1, 0)), ((g, 0), (0, F.inv(g)))]


def build_groups(F: FieldSpec, gamma: Digraph | None = None) -> tuple[PermGroup, PermGroup]:
    """L_2(q) and its extension by field automorphisms, as vertex permutations."""
    if gamma is None:
        gamma = build_gamma(F)
    gens = [veronese_permutation(F, m, gamma) for m in sl2_generators(F)]
    frob = frobenius_permutation(F)
    if not gamma.is_invariant_under(frob.images):
        raise ConstructionError("Frobenius does not preserve Gamma")
    small = PermGroup(gens)
    full = PermGroup(gens + [frob])
    q = F.q
    if small.order != q * (q * q - 1):
        raise ConstructionError(f"|L_2({q})| computed as {small.order}")
    if full.order != q * (q * q - 1) * F.e:
        raise ConstructionError(f"|PSigmaL(2,{q})| computed as {full.order}")
    return small, full


@dataclass(frozen=True, eq=False)
class ConstructionContext:
    field: FieldSpec
    X: VertexSet
    gamma: Digraph
    psl_gens: tuple[Permutation, ...]
    frobenius: Permutation
    group_small: PermGroup
    group_full: PermGroup


@lru_cache(maxsize=None)
def build_context(F: FieldSpec = GF8) -> ConstructionContext:
    gamma = build_gamma(F)
    small, full = build_groups(F, gamma)
    return ConstructionContext(F, vertex_set(F), gamma, small.generators,
                               full.generators[-1], small, full)


def antipodes(ctx: ConstructionContext, p: int) -> list[int]:
    return [j for j in ctx.X.antipodal_class(p) if j != p]


def antipode_split(ctx: ConstructionContext, p: int = BASE_POINT) -> tuple[list[int], list[int]]:
    """The two orbits of the full point stabilizer on the antipodes of ``p``.

    The first returned orbit is the one containing the smallest antipode.
    """
    if ctx.field.q != 8:
        raise ValueError("the antipode split is defined for q = 8 only")
    stab = point_stabilizer(ctx.group_full, p)
    orbs = orbits_on_set(stab, antipodes(ctx, p))
    if sorted(map(len, orbs)) != [3, 3]:
        raise ConstructionError(f"antipode orbits have sizes {[len(o) for o in orbs]}")
    orbs.sort(key=min)
    return orbs[0], orbs[1]


def orient_orbit(ctx: ConstructionContext, group: PermGroup, p: int,
                 targets) -> set[tuple[int, int]]:
    """The orbit under ``group`` of the arcs p -> t for t in ``targets``."""
    arcs = set()
    for g in group.elements:
        im = g.images
        gp = im[p]
        for t in targets:
            arcs.add((gp, im[t]))
    return arcs


def build_delta(ctx: ConstructionContext, choice: str = "A") -> Digraph:
    """Gamma plus the G-images of the arcs from the base point to one
    orbit of its antipodes; ``choice`` picks the orbit ("A" or "B")."""
    if choice not in ("A", "B"):
        raise ValueError(f"orbit choice must be 'A' or 'B', got {choice!r}")
    orbit = antipode_split(ctx, BASE_POINT)["AB".index(choice)]
    extra = orient_orbit(ctx, ctx.group_full, BASE_POINT, orbit)
    a = ctx.gamma.adj.copy()
    for u, v in extra:
        if a[u, v] or a[v, u]:
            raise ConstructionError(f"new arc ({u},{v}) collides with an existing one")
        a[u, v] = 1
    D = Digraph(a)
    k = ctx.field.q + 3
    outd, ind = degrees(D)
    if set(outd) != {k} or set(ind) != {k}:
        raise ConstructionError("oriented graph is not regular of degree q + 3")
    for g in ctx.group_full.generators:
        if not D.is_invariant_under(g.images):
            raise ConstructionError("oriented graph is not invariant under the group")
    return D


@dataclass
class BundleCertificate:
    passed: bool
    singletons: list[int]
    conic_orbits: dict[int, list[int]]   # c -> orbit
    reason: str = ""


def verify_bundle_structure(ctx: ConstructionContext, p: int = BASE_POINT) -> BundleCertificate:
    """Match the L_2(q)-stabilizer orbits of ``p`` with the antipodal class
    and the conics Q(p)Q(x) + c (x,p)^2 = 0."""
    F, X = ctx.field, ctx.X
    q = F.q
    stab = point_stabilizer(ctx.group_small, p)
    orbs = orbits_on_set(stab, range(len(X)))
    singles = sorted(o[0] for o in orbs if len(o) == 1)
    big = [o for o in orbs if len(o) != 1]
    fail = lambda why: BundleCertificate(False, singles, {}, why)  # noqa: E731
    if singles != X.antipodal_class(p):
        return fail("singleton orbits are not the antipodal class")
    if len(big) != q - 1 or any(len(o) != q for o in big):
        return fail(f"non-singleton orbit sizes {[len(o) for o in big]}")
    tangent = perp_conic_point(F, X[p])
    matched: dict[int, list[int]] = {}
    for c in range(1, q):
        conic = bundle_conic(F, X[p], c)
        if tangent in conic:
            return fail("bundle conic contains the tangent point")
        idx = sorted(X.index[x] for x in conic)
        hit = [o for o in big if o == idx]
        if len(hit) != 1:
            return fail(f"conic c={c} is not a stabilizer orbit")
        matched[c] = idx
    if len({tuple(o) for o in matched.values()}) != q - 1:
        return fail("two conics give the same orbit")
    return BundleCertificate(True, singles, matched)
