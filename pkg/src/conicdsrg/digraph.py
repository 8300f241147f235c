"""Dense 0/1 digraphs and the exact identities that certify them.

All counting is done with int64 matrix products; entries of A^2 are
bounded by n, so nothing can overflow or round.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np


class Digraph:
    """Loopless digraph on vertices 0..n-1 with a read-only adjacency matrix."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        a = np.array(adj, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if ((a != 0) & (a != 1)).any():
            raise ValueError("adjacency entries must be 0 or 1")
        if a.diagonal().any():
            raise ValueError("loops are not allowed")
        a.setflags(write=False)
        self.adj = a

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in arcs:
            a[u, v] = 1
        return cls(a)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def arcs(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in zip(*np.nonzero(self.adj))]

    def out_neighbors(self, u: int) -> list[int]:
        return np.flatnonzero(self.adj[u]).tolist()

    def in_neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adj[:, v]).tolist()

    def is_symmetric(self) -> bool:
        return bool((self.adj == self.adj.T).all())

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Image under the vertex map u -> perm[u]."""
        p = np.asarray(perm)
        inv = np.empty_like(p)
        inv[p] = np.arange(len(p))
        return Digraph(self.adj[np.ix_(inv, inv)])

    def is_invariant_under(self, perm: Sequence[int]) -> bool:
        p = np.asarray(perm)
        return bool((self.adj[np.ix_(p, p)] == self.adj).all())

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash(self.adj.tobytes())

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={int(self.adj.sum())})"


@dataclass(frozen=True)
class DsrgParams:
    v: int
    k: int
    t: int
    lam: int
    mu: int

    def __post_init__(self):
        if min(self.v, self.k, self.t, self.lam, self.mu) < 0:
            raise ValueError("parameters must be nonnegative")
        if not (self.v > self.k >= self.t and self.lam < self.k and self.mu <= self.k):
            raise ValueError(f"infeasible dsrg parameters {self}")

    @classmethod
    def parse(cls, text: str) -> DsrgParams:
        vals = [int(s) for s in text.replace(" ", "").split(",")]
        if len(vals) != 5:
            raise ValueError("expected five comma-separated integers v,k,t,lambda,mu")
        return cls(*vals)

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.t},{self.lam},{self.mu})"


@dataclass
class DsrgCertificate:
    passed: bool
    params: DsrgParams
    witness: tuple[int, int] | None = None
    expected: int | None = None
    found: int | None = None
    reason: str = ""

    def __str__(self) -> str:
        if self.passed:
            return f"PASS dsrg{self.params}: A^2 = tI + lambda A + mu (J - I - A) holds"
        return f"FAIL dsrg{self.params}: {self.reason}"


def degrees(D: Digraph) -> tuple[list[int], list[int]]:
    a = D.adj.astype(np.int64)
    return a.sum(axis=1).tolist(), a.sum(axis=0).tolist()


def two_path_counts(D: Digraph) -> np.ndarray:
    a = D.adj.astype(np.int64)
    return a @ a


def verify_dsrg(D: Digraph, p: DsrgParams) -> DsrgCertificate:
    if D.n != p.v:
        return DsrgCertificate(False, p, reason=f"vertex count {D.n} != v = {p.v}")
    outd, ind = degrees(D)
    for kind, degs in (("out", outd), ("in", ind)):
        for u, d in enumerate(degs):
            if d != p.k:
                return DsrgCertificate(False, p, witness=(u, u), expected=p.k, found=d,
                                       reason=f"vertex {u} has {kind}-degree {d}, expected {p.k}")
    a = D.adj.astype(np.int64)
    eye = np.eye(p.v, dtype=np.int64)
    expect = p.t * eye + p.lam * a + p.mu * (1 - eye - a)
    bad = np.argwhere(a @ a != expect)
    if len(bad):
        x, y = (int(i) for i in bad[0])
        found = int((a @ a)[x, y])
        kind = "diagonal" if x == y else ("arc" if a[x, y] else "non-arc")
        return DsrgCertificate(False, p, witness=(x, y), expected=int(expect[x, y]),
                               found=found,
                               reason=f"(A^2)[{x},{y}] = {found} on a {kind} entry, "
                                      f"expected {int(expect[x, y])}")
    return DsrgCertificate(True, p)


def distance_matrix(D: Digraph) -> np.ndarray:
    """BFS distances, -1 for unreachable pairs."""
    n = D.n
    a = D.adj.astype(bool)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    layer = reached.copy()
    d = 0
    while layer.any():
        d += 1
        layer = (layer.astype(np.int64) @ a.astype(np.int64) > 0) & ~reached
        dist[layer] = d
        reached |= layer
    return dist


@dataclass
class DrgCertificate:
    passed: bool
    expected: tuple[tuple[int, ...], tuple[int, ...]]
    found: tuple[tuple[int, ...], tuple[int, ...]] | None
    reason: str = ""

    def __str__(self) -> str:
        if self.found is None:
            return f"FAIL: {self.reason}"
        b, c = self.found
        arr = "{" + ",".join(map(str, b)) + ";" + ",".join(map(str, c)) + "}"
        return ("PASS " if self.passed else "FAIL ") + f"intersection array {arr}" + (
            "" if self.passed else f": {self.reason}")


def intersection_array(D: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]] | str:
    """Compute (b_0..b_{d-1}; c_1..c_d) or return a string saying why none exists."""
    if not D.is_symmetric():
        return "graph is not symmetric"
    dist = distance_matrix(D)
    if (dist < 0).any():
        return "graph is not connected"
    diam = int(dist.max())
    a = D.adj.astype(np.int64)
    # counts[j][v, u] = number of neighbours of v at distance j from u
    counts = [a @ (dist == j).astype(np.int64).T for j in range(diam + 1)]
    zero = np.zeros_like(a)
    b, c = [], []
    for i in range(diam + 1):
        mask = dist.T == i  # mask[v, u]: v at distance i from u
        ci = counts[i - 1] if i > 0 else zero
        bi = counts[i + 1] if i < diam else zero
        cvals, bvals = np.unique(ci[mask]), np.unique(bi[mask])
        if len(cvals) != 1 or len(bvals) != 1:
            return f"distance {i}: c-values {cvals.tolist()}, b-values {bvals.tolist()}"
        if i < diam:
            b.append(int(bvals[0]))
        if i > 0:
            c.append(int(cvals[0]))
    return tuple(b), tuple(c)


def verify_drg(D: Digraph, array) -> DrgCertificate:
    """Check distance-regularity with intersection array ``array = (b, c)``."""
    expected = (tuple(array[0]), tuple(array[1]))
    found = intersection_array(D)
    if isinstance(found, str):
        return DrgCertificate(False, expected, None, found)
    if found != expected:
        return DrgCertificate(False, expected, found, "array differs from expected")
    return DrgCertificate(True, expected, found)


def antipodal_partition(D: Digraph) -> list[list[int]]:
    """Classes {v} + (vertices at distance 3 from v) of a diameter-3 DRG.

    Raises ValueError if these sets fail to partition the vertices or the
    quotient is not complete.
    """
    arr = intersection_array(D)
    if isinstance(arr, str) or len(arr[0]) != 3:
        raise ValueError("antipodal partition needs a distance-regular graph of diameter 3")
    dist = distance_matrix(D)
    classes = {tuple(sorted(np.flatnonzero((dist[v] == 3) | (dist[v] == 0)).tolist()))
               for v in range(D.n)}
    cls = sorted(classes)
    owner = {}
    for k, c in enumerate(cls):
        for v in c:
            if v in owner:
                raise ValueError("distance-3 relation is not an equivalence")
            owner[v] = k
    a = D.adj
    for i, ci in enumerate(cls):
        for cj in cls[:i]:
            if not a[np.ix_(ci, cj)].any():
                raise ValueError("quotient graph is not complete")
        if a[np.ix_(ci, ci)].any():
            raise ValueError("an antipodal class contains an edge")
    return [list(c) for c in cls]


def transpose(D: Digraph) -> Digraph:
    return Digraph(D.adj.T)


def stable_partition_from_base(D: Digraph, base: int) -> list[int]:
    """Sorted cell sizes of the coarsest equitable refinement with ``base``
    individualized."""
    from .isomorphism import refine

    init = np.zeros(D.n, dtype=np.int64)
    init[base] = 1
    colors = refine(D, init)
    return sorted(np.bincount(colors).tolist())


def quotient_matrix(D: Digraph, colors) -> np.ndarray:
    """Entry [i, j]: number of out-neighbours a vertex of cell i has in cell j.

    Only meaningful for an equitable partition; asserted.
    """
    colors = np.asarray(colors)
    k = int(colors.max()) + 1
    onehot = np.eye(k, dtype=np.int64)[colors]
    counts = D.adj.astype(np.int64) @ onehot
    q = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        rows = counts[colors == i]
        assert (rows == rows[0]).all(), "partition is not equitable"
        q[i] = rows[0]
    return q
