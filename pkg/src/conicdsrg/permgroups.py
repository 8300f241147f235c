"""Permutation groups small enough to enumerate outright.

Composition is right-to-left: ``g * h`` applies ``h`` first, so
``(g * h)(i) == g(h(i))``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from math import lcm

DEFAULT_CLOSURE_CAP = 10 ** 6


class ClosureLimitError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        seen = [False] * self.degree
        o = 1
        for i in range(self.degree):
            if seen[i]:
                continue
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            o = lcm(o, length)
        return o

    def format(self) -> str:
        return " ".join(map(str, self.images))

    @classmethod
    def parse(cls, line: str) -> Permutation:
        return cls(tuple(int(t) for t in line.split()))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """g o h: apply h, then g."""
    if g.degree != h.degree:
        raise ValueError(f"degree mismatch: {g.degree} vs {h.degree}")
    gi = g.images
    return Permutation._trusted(tuple(gi[j] for j in h.images))


def closure(generators: Sequence[Permutation],
            cap: int = DEFAULT_CLOSURE_CAP) -> list[Permutation]:
    """All elements of the group generated by ``generators``.

    Breadth-first from the identity, left-multiplying by generators; each
    frontier is sorted before expansion so the output order depends only
    on the generator set's group, not on hashing.
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].degree
    if any(g.degree != n for g in generators):
        raise ValueError("generators have different degrees")
    gens = sorted(set(generators))
    e = Permutation.identity(n)
    seen = {e}
    out = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ClosureLimitError(
                            f"group closure exceeded {cap} elements")
        nxt.sort()
        out.extend(nxt)
        frontier = nxt
    return out


class PermGroup:
    """A permutation group given by generators, enumerated on first use."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 elements: list[Permutation] | None = None,
                 cap: int = DEFAULT_CLOSURE_CAP):
        self.generators = tuple(generators)
        if degree is None:
            if not self.generators:
                raise ValueError("degree needed for a group without generators")
            degree = self.generators[0].degree
        self.degree = degree
        self.cap = cap
        if elements is not None:
            self.__dict__["elements"] = elements

    @classmethod
    def trivial(cls, n: int) -> PermGroup:
        return cls([], n)

    @cached_property
    def elements(self) -> list[Permutation]:
        if not self.generators:
            return [Permutation.identity(self.degree)]
        return closure(self.generators, self.cap)

    @cached_property
    def _element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def is_transitive(self) -> bool:
        return len(orbit(self, 0)) == self.degree

    def format(self) -> str:
        head = f"degree={self.degree} gens={len(self.generators)}\n"
        return head + "".join(g.format() + "\n" for g in self.generators)

    @classmethod
    def parse(cls, text: str) -> PermGroup:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        fields = dict(tok.split("=") for tok in lines[0].split())
        gens = [Permutation.parse(ln) for ln in lines[1:]]
        if len(gens) != int(fields["gens"]):
            raise ValueError("generator count does not match header")
        return cls(gens, int(fields["degree"]))


def orbit(group: PermGroup, point: int) -> list[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in group.generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    elts = [g for g in group.elements if g.images[point] == point]
    return PermGroup(elts, group.degree, elements=elts)


def orbits_on_set(group: PermGroup, points: Iterable[int]) -> list[list[int]]:
    """Orbit decomposition of an invariant subset, sorted by (size, min)."""
    pts = set(points)
    for g in group.generators:
        if any(g.images[x] not in pts for x in pts):
            raise ValueError("point set is not invariant under the group")
    orbs = []
    left = set(pts)
    while left:
        o = orbit(group, min(left))
        left.difference_update(o)
        orbs.append(o)
    orbs.sort(key=lambda o: (len(o), o[0]))
    return orbs


def is_elementary_abelian_2(group: PermGroup) -> bool:
    elts = group.elements
    if any(not g.is_identity() and not compose(g, g).is_identity() for g in elts):
        return False
    gens = group.generators
    return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def normal_closure(group: PermGroup, g: Permutation) -> PermGroup:
    """Smallest normal subgroup of ``group`` containing ``g``."""
    conj = {compose(compose(h, g), h.inverse()) for h in group.elements}
    return PermGroup(reduce_generators(sorted(conj)), group.degree)


def reduce_generators(perms: Sequence[Permutation]) -> list[Permutation]:
    """A subset of ``perms`` generating the same group, added greedily."""
    if not perms:
        return []
    gens: list[Permutation] = []
    members = {Permutation.identity(perms[0].degree)}
    for p in perms:
        if p in members:
            continue
        gens.append(p)
        members = set(closure(gens))
    return gens
