"""Colour refinement and individualization-refinement for digraphs.

A single search tree serves canonical forms, isomorphism testing, and
automorphism groups.  The target cell at each node is the smallest
non-singleton cell (lowest colour on ties); every vertex of it is
individualized in turn and there is no automorphism pruning, so the
number of leaves with the canonical matrix equals |Aut(D)|.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .digraph import Digraph
from .permgroups import (
    PermGroup,
    Permutation,
    normal_closure,
    orbit,
    reduce_generators,
)

DEFAULT_NODE_BUDGET = 10 ** 7


class SearchBudgetExceeded(RuntimeError):
    pass


def _normalize(colors) -> np.ndarray:
    _, inv = np.unique(np.asarray(colors), return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def refine(D: Digraph, initial) -> np.ndarray:
    """Coarsest stable refinement of ``initial``.

    New colour of v is the rank of (old colour, out-neighbour colour
    counts, in-neighbour colour counts) among all signatures, so numbering
    is label-independent and old colour order is preserved.
    """
    src, dst = np.nonzero(D.adj)
    return _refine(src, dst, D.n, _normalize(initial))


def _refine(src: np.ndarray, dst: np.ndarray, n: int, colors: np.ndarray) -> np.ndarray:
    k = int(colors.max()) + 1 if n else 0
    while True:
        out_counts = np.bincount(src * k + colors[dst], minlength=n * k).reshape(n, k)
        in_counts = np.bincount(dst * k + colors[src], minlength=n * k).reshape(n, k)
        # big-endian rows compare bytewise in numeric lexicographic order
        sig = np.ascontiguousarray(
            np.column_stack([colors, out_counts, in_counts]).astype(">u4"))
        rows = sig.view(np.dtype((np.void, sig.dtype.itemsize * sig.shape[1]))).ravel()
        uniq, new = np.unique(rows, return_inverse=True)
        if len(uniq) == k:
            return colors
        colors, k = new.reshape(-1).astype(np.int64), len(uniq)


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    c = 2 * colors
    c[colors == colors[v]] += 1
    c[v] -= 1
    return c


def _target_cell(colors: np.ndarray) -> np.ndarray | None:
    sizes = np.bincount(colors)
    nonsingle = np.flatnonzero(sizes > 1)
    if len(nonsingle) == 0:
        return None
    cell = nonsingle[np.argmin(sizes[nonsingle])]
    return np.flatnonzero(colors == cell)


def _leaf_form(adj: np.ndarray, labels: np.ndarray) -> bytes:
    order = np.argsort(labels)
    return np.packbits(adj[np.ix_(order, order)]).tobytes()


@dataclass
class CanonicalResult:
    form: bytes
    labeling: np.ndarray          # vertex -> canonical position
    automorphisms: list[Permutation] = field(repr=False)
    canonical_leaves: int = 0     # leaves carrying the canonical matrix
    leaves: int = 0
    nodes: int = 0


def canonical_search(D: Digraph, budget: int = DEFAULT_NODE_BUDGET,
                     initial=None) -> CanonicalResult:
    """Walk the whole individualization-refinement tree of ``D``."""
    n = D.n
    adj = D.adj
    init = np.zeros(n, dtype=np.int64) if initial is None else initial
    best_form: bytes | None = None
    best_lab: np.ndarray | None = None
    first_of: dict[bytes, np.ndarray] = {}
    hits: dict[bytes, int] = {}
    autos: list[Permutation] = []
    nodes = leaves = 0

    src, dst = np.nonzero(adj)
    stack = [_refine(src, dst, n, _normalize(init))]
    while stack:
        colors = stack.pop()
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("canonical search exceeded budget")
        cell = _target_cell(colors)
        if cell is None:
            leaves += 1
            form = _leaf_form(adj, colors)
            hits[form] = hits.get(form, 0) + 1
            ref = first_of.get(form)
            if ref is None:
                first_of[form] = colors
            else:
                # ref^-1 o colors maps D onto itself
                inv = np.argsort(ref)
                autos.append(Permutation(tuple(inv[colors].tolist())))
            if best_form is None or form < best_form:
                best_form, best_lab = form, colors
            continue
        for v in reversed(cell.tolist()):
            stack.append(_refine(src, dst, n, _normalize(_individualize(colors, v))))

    header = n.to_bytes(4, "big")
    return CanonicalResult(header + best_form, best_lab, autos,
                           hits[best_form], leaves, nodes)


def canonical_form(D: Digraph, budget: int = DEFAULT_NODE_BUDGET) -> bytes:
    return canonical_search(D, budget).form


def _verify_isomorphism(D1: Digraph, D2: Digraph, images) -> bool:
    p = np.asarray(images)
    return bool((D2.adj[np.ix_(p, p)] == D1.adj).all())


def find_isomorphism(D1: Digraph, D2: Digraph,
                     budget: int = DEFAULT_NODE_BUDGET) -> Permutation | None:
    """A vertex map sending the arcs of D1 exactly onto the arcs of D2."""
    if D1.n != D2.n:
        raise ValueError("digraphs have different vertex counts")
    if not np.array_equal(np.sort(D1.adj.sum(axis=1)), np.sort(D2.adj.sum(axis=1))):
        return None
    r1, r2 = canonical_search(D1, budget), canonical_search(D2, budget)
    if r1.form != r2.form:
        return None
    inv2 = np.argsort(r2.labeling)
    images = inv2[r1.labeling]
    if not _verify_isomorphism(D1, D2, images):
        raise AssertionError("canonical labelings produced a non-isomorphism")
    return Permutation(tuple(images.tolist()))


def is_automorphism(D: Digraph, g: Permutation) -> bool:
    return _verify_isomorphism(D, D, g.images)


def automorphism_group(D: Digraph, budget: int = DEFAULT_NODE_BUDGET) -> PermGroup:
    res = canonical_search(D, budget)
    for g in res.automorphisms:
        if not is_automorphism(D, g):
            raise AssertionError("search produced a non-automorphism")
    gens = reduce_generators(sorted(set(res.automorphisms)))
    group = PermGroup(gens, D.n) if gens else PermGroup.trivial(D.n)
    # Aut acts regularly on the leaves carrying the canonical matrix
    assert group.order == res.canonical_leaves, (group.order, res.canonical_leaves)
    return group


@dataclass
class AutStructureReport:
    order: int
    transitive: bool
    element_orders: list[int]
    socle_order: int | None

    def __str__(self) -> str:
        return (f"order {self.order}, {'transitive' if self.transitive else 'intransitive'}, "
                f"element orders {self.element_orders}, "
                f"normal closure of an order-7 element: {self.socle_order}")


def aut_structure_report(G: PermGroup) -> AutStructureReport:
    orders = sorted({g.order() for g in G.elements})
    seven = next((g for g in G.elements if g.order() == 7), None)
    socle = normal_closure(G, seven).order if seven is not None else None
    return AutStructureReport(G.order, len(orbit(G, 0)) == G.degree if G.degree else True,
                              orders, socle)
