"""Linkings: spans ``X <- A -> Y`` of injective relations, up to renaming of ``A``.

A link is stored by its footprint, a pair of disjoint-from-everyone-else
vertex sets on the left (``X``) and right (``Y``).  Links with an empty
footprint are loops; they are interchangeable, so only their number is kept.

>>> L = Linking.build(2, 2, [([0], [1]), ([1], [0])], loops=1)
>>> L.links[0]
Link(left=(0,), right=(1,))
>>> flatten(L).loops
0
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .irel import InjRel, VertexSet


@dataclass(frozen=True, order=True)
class Link:
    left: tuple[int, ...]
    right: tuple[int, ...]

    @classmethod
    def of(cls, left: Iterable[int] = (), right: Iterable[int] = ()) -> Link:
        return cls(tuple(sorted(set(left))), tuple(sorted(set(right))))

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right)

    def sort_key(self):
        # minimum foot, all X indices ordered before all Y indices
        if self.left:
            return (0, self.left[0])
        return (1, self.right[0])


def _as_vertex_set(v) -> VertexSet:
    if isinstance(v, VertexSet):
        return v
    if isinstance(v, int):
        return VertexSet(v)
    labels = tuple(v)
    return VertexSet(len(labels), labels)


class LinkingError(ValueError):
    """A footprint violates the disjointness or range constraints."""


@dataclass(frozen=True)
class Linking:
    """A linking ``left -> right`` in canonical form.

    ``links`` is sorted by minimum foot; no stored link is empty and no two
    links share a vertex.
    """

    left: VertexSet
    right: VertexSet
    links: tuple[Link, ...] = ()
    loops: int = 0

    def __post_init__(self):
        if self.loops < 0:
            raise LinkingError(f"loop count must be >= 0, got {self.loops}")
        if any(not link.size for link in self.links):
            raise LinkingError("links with empty footprint are loops; "
                               "count them in `loops` instead")
        links = tuple(sorted(self.links, key=Link.sort_key))
        seen_l: dict[int, int] = {}
        seen_r: dict[int, int] = {}
        for k, link in enumerate(links):
            for side, feet, seen, n in (("left", link.left, seen_l, self.left.size),
                                        ("right", link.right, seen_r, self.right.size)):
                for v in feet:
                    if not (0 <= v < n):
                        raise LinkingError(
                            f"{side} vertex {v} out of range (size {n})")
                    if v in seen:
                        raise LinkingError(
                            f"{side} vertex {v} is in more than one link")
                    seen[v] = k
        object.__setattr__(self, "links", links)

    @classmethod
    def build(cls, left, right, links: Iterable = (), loops: int = 0) -> Linking:
        """Build from sizes (or label lists) and ``(left_feet, right_feet)`` pairs."""
        return cls(_as_vertex_set(left), _as_vertex_set(right),
                   tuple(l if isinstance(l, Link) else Link.of(*l) for l in links),
                   loops)

    @classmethod
    def _trusted(cls, left: VertexSet, right: VertexSet, links, loops: int) -> Linking:
        # skips validation; callers guarantee disjoint, non-empty, sorted links
        obj = object.__new__(cls)
        object.__setattr__(obj, "left", left)
        object.__setattr__(obj, "right", right)
        object.__setattr__(obj, "links", tuple(links))
        object.__setattr__(obj, "loops", loops)
        return obj

    def __repr__(self):
        body = ", ".join(f"{list(l.left)}|{list(l.right)}" for l in self.links)
        return (f"Linking({self.left.size}->{self.right.size}: {body}"
                f"{'; loops=' + str(self.loops) if self.loops else ''})")

    def key(self):
        """Hashable canonical encoding, ignoring vertex labels."""
        return (self.left.size, self.right.size, self.links, self.loops)

    @property
    def size(self) -> int:
        return len(self.links) + self.loops


def from_span(f: InjRel, g: InjRel) -> Linking:
    if f.dom != g.dom:
        raise LinkingError(f"span legs have different domains: {f.dom!r}, {g.dom!r}")
    lf: dict[int, list[int]] = {}
    rg: dict[int, list[int]] = {}
    for a, x in f.pairs:
        lf.setdefault(a, []).append(x)
    for a, y in g.pairs:
        rg.setdefault(a, []).append(y)
    links, loops = [], 0
    for a in range(f.dom.size):
        if a in lf or a in rg:
            links.append(Link.of(lf.get(a, ()), rg.get(a, ())))
        else:
            loops += 1
    return Linking(f.cod, g.cod, tuple(links), loops)


def to_span(L: Linking) -> tuple[InjRel, InjRel]:
    """Legs ``(f: A -> X, g: A -> Y)``; ``A`` lists the links, then one element per loop."""
    A = VertexSet(L.size)
    f = frozenset((a, x) for a, l in enumerate(L.links) for x in l.left)
    g = frozenset((a, y) for a, l in enumerate(L.links) for y in l.right)
    return InjRel(A, L.left, f), InjRel(A, L.right, g)


def identity_linking(X) -> Linking:
    X = _as_vertex_set(X)
    return Linking._trusted(X, X, [Link((i,), (i,)) for i in range(X.size)], 0)


def is_isomorphic(L1: Linking, L2: Linking) -> bool:
    # footprints determine the renaming of non-loop links; loops only by count
    return L1.key() == L2.key()


def flatten(L: Linking) -> Linking:
    return Linking._trusted(L.left, L.right, L.links, 0)


def add_loops(L: Linking, k: int) -> Linking:
    if k < 0:
        raise ValueError("cannot add a negative number of loops")
    return Linking._trusted(L.left, L.right, L.links, L.loops + k)


def validate(L: Linking) -> None:
    """Re-run the constructor checks; raises :class:`LinkingError`."""
    Linking(L.left, L.right, L.links, L.loops)


def random_linking(rng: random.Random, m: int, n: int, max_links: int = 6,
                   p_unused: float = 0.2, max_loops: int = 2) -> Linking:
    """Random linking ``m -> n``: each vertex joins one of up to ``max_links``
    links or, with probability ``p_unused``, none."""
    k = rng.randint(0, max_links)
    feet: list[tuple[list[int], list[int]]] = [([], []) for _ in range(k)]
    if k:
        for side, size in ((0, m), (1, n)):
            for v in range(size):
                if rng.random() >= p_unused:
                    feet[rng.randrange(k)][side].append(v)
    links = [Link.of(l, r) for l, r in feet if l or r]
    return Linking(VertexSet(m), VertexSet(n), tuple(links),
                   rng.randint(0, max_loops))


def linking_from_blocks(m: int, n: int, blocks: Sequence[Iterable[int]],
                        loops: int = 0) -> Linking:
    """Linking from blocks over the flat index space ``0..m-1`` (left) then ``m..m+n-1`` (right)."""
    links = []
    for b in blocks:
        b = list(b)
        links.append(Link.of([v for v in b if v < m], [v - m for v in b if v >= m]))
    return Linking(VertexSet(m), VertexSet(n), tuple(links), loops)


def blocks_of(L: Linking) -> list[tuple[int, ...]]:
    """Inverse of :func:`linking_from_blocks`."""
    m = L.left.size
    return [l.left + tuple(m + y for y in l.right) for l in L.links]
