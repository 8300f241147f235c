"""The conic Q(x) = x0*x2 + x1^2 in PG(2, q), q even, and the point set
around it.

Points are plain ``(x0, x1, x2)`` tuples of bit-encoded field elements.
The polar form of Q is (x, y) = x0*y2 + x2*y0; its radical is the
nucleus N = (0, 1, 0).  Every nonsingular point has exactly one
representative with Q = 1 (scalars with a^2 = 1 are trivial in
characteristic 2), and that representative is what the vertex set stores.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .gf2e import FieldSpec

Point = tuple[int, int, int]

NUCLEUS: Point = (0, 1, 0)


class SingularPointError(ValueError):
    pass


def quadratic_form(F: FieldSpec, x: Point) -> int:
    return F.mul(x[0], x[2]) ^ F.mul(x[1], x[1])


def bilinear_form(F: FieldSpec, x: Point, y: Point) -> int:
    return F.mul(x[0], y[2]) ^ F.mul(x[2], y[0])


def scale(F: FieldSpec, a: int, x: Point) -> Point:
    return (F.mul(a, x[0]), F.mul(a, x[1]), F.mul(a, x[2]))


def normalize(F: FieldSpec, x: Point) -> Point:
    """Return Q(x)^(-1/2) * x, the representative of <x> with Q = 1."""
    qx = quadratic_form(F, x)
    if qx == 0:
        raise SingularPointError("singular point has no normalization")
    return scale(F, F.inv(F.sqrt(qx)), x)


def projective_points(F: FieldSpec) -> list[Point]:
    """One representative per point of PG(2,q), first nonzero coordinate 1."""
    q = F.q
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, b) for b in range(q)]
    pts.append((0, 0, 1))
    return sorted(pts)


@dataclass(frozen=True)
class VertexSet:
    """The q^2 - 1 nonsingular points other than the nucleus, normalized
    and sorted lexicographically."""

    field: FieldSpec
    points: tuple[Point, ...]
    index: dict[Point, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def locate(self, x: Point) -> int:
        """Index of the vertex spanned by an arbitrary representative ``x``."""
        return self.index[normalize(self.field, x)]

    def antipodal_class(self, i: int) -> list[int]:
        """Vertices j with (x_i, x_j) = 0, including i itself."""
        p = self.points[i]
        return [j for j, x in enumerate(self.points)
                if bilinear_form(self.field, p, x) == 0]

    def format(self) -> str:
        w = max(1, (self.field.e + 3) // 4)
        return "".join(
            f"{i}: ({x[0]:0{w}x},{x[1]:0{w}x},{x[2]:0{w}x})\n"
            for i, x in enumerate(self.points))


@lru_cache(maxsize=None)
def vertex_set(F: FieldSpec) -> VertexSet:
    pts = sorted(normalize(F, x) for x in projective_points(F)
                 if x != NUCLEUS and quadratic_form(F, x) != 0)
    assert len(pts) == F.q ** 2 - 1
    return VertexSet(F, tuple(pts), {x: i for i, x in enumerate(pts)})


@lru_cache(maxsize=None)
def conic_points(F: FieldSpec) -> tuple[Point, ...]:
    pts = tuple(x for x in projective_points(F) if quadratic_form(F, x) == 0)
    assert len(pts) == F.q + 1
    return pts


def perp_conic_point(F: FieldSpec, p: Point) -> Point:
    """The point where the tangent line p^perp meets the conic.

    p^perp contains the nucleus, so it is a tangent and meets C once.
    """
    hits = [y for y in conic_points(F) if bilinear_form(F, y, p) == 0]
    assert len(hits) == 1, f"p^perp meets the conic in {len(hits)} points"
    return hits[0]


def bundle_conic(F: FieldSpec, p: Point, c: int) -> frozenset[Point]:
    """Vertices x with Q(p)Q(x) + c (x,p)^2 = 0."""
    if c == 0:
        raise ValueError("bundle parameter c must be nonzero")
    qp = quadratic_form(F, p)
    out = []
    for x in vertex_set(F):
        b = bilinear_form(F, x, p)
        if F.mul(qp, quadratic_form(F, x)) ^ F.mul(c, F.mul(b, b)) == 0:
            out.append(x)
    return frozenset(out)
