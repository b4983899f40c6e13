"""Finite sets and injective relations between them.

A relation ``R: A -> Z`` is injective when every ``z`` in ``Z`` has at most
one preimage.  Vertices of a :class:`VertexSet` are the integers
``0 .. size-1``; labels only matter for display.

>>> X = VertexSet(2)
>>> sorted(identity(X).pairs)
[(0, 0), (1, 1)]
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class VertexSet:
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"vertex set size must be >= 0, got {self.size}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.size:
                raise ValueError(
                    f"expected {self.size} labels, got {len(labels)}")
            if len(set(labels)) != len(labels):
                raise ValueError(f"labels must be distinct: {labels}")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def matches(self, other: VertexSet) -> bool:
        """Interface compatibility: equal size, and equal labels when both carry them."""
        if self.size != other.size:
            return False
        if self.labels is None or other.labels is None:
            return True
        return self.labels == other.labels

    def plus(self, other: VertexSet) -> VertexSet:
        """Tagged disjoint union: ``inl(i) = i`` and ``inr(j) = self.size + j``."""
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = (tuple(f"inl {s}" for s in self.labels)
                      + tuple(f"inr {s}" for s in other.labels))
        return VertexSet(self.size + other.size, labels)

    def __repr__(self):
        if self.labels is None:
            return f"VertexSet({self.size})"
        return f"VertexSet({self.size}, {list(self.labels)})"


class InterfaceError(ValueError):
    """Raised when two morphisms do not share the required object."""


def _check_interface(expected: VertexSet, got: VertexSet, what: str):
    if not expected.matches(got):
        raise InterfaceError(f"{what}: {expected!r} does not match {got!r}")


@dataclass(frozen=True)
class InjRel:
    """Injective relation ``dom -> cod`` given by its set of index pairs."""

    dom: VertexSet
    cod: VertexSet
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset((int(a), int(z)) for a, z in self.pairs)
        seen = {}
        for a, z in sorted(pairs):
            if not (0 <= a < self.dom.size):
                raise ValueError(f"domain index {a} out of range for {self.dom!r}")
            if not (0 <= z < self.cod.size):
                raise ValueError(f"codomain index {z} out of range for {self.cod!r}")
            if z in seen:
                raise ValueError(
                    f"not injective: codomain element {z} has preimages "
                    f"{seen[z]} and {a}")
            seen[z] = a
        object.__setattr__(self, "pairs", pairs)

    def __call__(self, a: int) -> frozenset[int]:
        return image(self, (a,))

    def preimage_of(self, z: int) -> int | None:
        for a, w in self.pairs:
            if w == z:
                return a
        return None


def identity(X: VertexSet) -> InjRel:
    return InjRel(X, X, frozenset((i, i) for i in range(X.size)))


def compose(S: InjRel, R: InjRel) -> InjRel:
    """Relational composite ``S . R`` (first ``R``, then ``S``)."""
    _check_interface(R.cod, S.dom, "compose")
    out = {}
    for y, z in S.pairs:
        out.setdefault(y, []).append(z)
    return InjRel(R.dom, S.cod, frozenset(
        (x, z) for x, y in R.pairs for z in out.get(y, ())))


def image(R: InjRel, alpha: Iterable[int]) -> frozenset[int]:
    alpha = set(alpha)
    for a in alpha:
        if not (0 <= a < R.dom.size):
            raise ValueError(f"index {a} out of range for {R.dom!r}")
    return frozenset(z for a, z in R.pairs if a in alpha)


def is_total(R: InjRel) -> bool:
    return {a for a, _ in R.pairs} == set(range(R.dom.size))


def is_monic(m: InjRel) -> bool:
    """Monicity in the category of injective relations.

    A morphism here is monic exactly when it is total, so this is
    :func:`is_total`.  The quantified definition is checked against this
    one by brute force in the test suite.
    """
    return is_total(m)


def copair(r: InjRel, s: InjRel) -> InjRel:
    """``[r, s]: A -> M + N`` with ``s`` shifted into the right summand."""
    _check_interface(r.dom, s.dom, "copair")
    shift = r.cod.size
    return InjRel(r.dom, r.cod.plus(s.cod),
                  r.pairs | frozenset((a, shift + n) for a, n in s.pairs))
