"""The classical diagram monoids as subcategories of linkings.

Membership is a conjunction of morphism predicates:

========  ========  =====  ======  ======
family    loopless  total  binary  planar
========  ========  =====  ======  ======
link      (flat)
part      (flat)    yes
brau      (flat)    yes    yes
tlieb     (flat)    yes    yes     yes
nat       (flat)    objects must be empty
========  ========  =====  ======  ======

Planarity places the left vertices ``0..m-1`` and then the right vertices
``n-1..0`` around a circle (the boundary of the usual two-row picture) and
asks that no two links interleave.  The same rule is used for non-binary
links, which gives the planar partition monoids.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .compose import compose_with_loops
from .linking import Linking, LinkingError, flatten, linking_from_blocks


class Kind(enum.Enum):
    LINK = "link"
    PART = "part"
    BRAU = "brau"
    TLIEB = "tlieb"
    NAT = "nat"


@dataclass(frozen=True)
class FamilyTag:
    kind: Kind
    loopless: bool = False

    @classmethod
    def parse(cls, text: str) -> FamilyTag:
        """``"brau"``, ``"brau-flat"``, ``"tlieb"`` ...; ``"-flat"`` selects the loopless variant."""
        name = text.strip().lower()
        flat = name.endswith("-flat")
        if flat:
            name = name[:-5]
        try:
            return cls(Kind(name), flat)
        except ValueError:
            known = ", ".join(k.value for k in Kind)
            raise ValueError(f"unknown family {text!r}; expected one of {known} "
                             f"(optionally with -flat)") from None

    def __str__(self):
        return self.kind.value + ("-flat" if self.loopless else "")


ALL_TAGS = tuple(FamilyTag(k, f) for k in Kind for f in (False, True))


def is_total_linking(L: Linking) -> bool:
    left = sum(len(l.left) for l in L.links)
    right = sum(len(l.right) for l in L.links)
    # links are disjoint, so counting feet is enough
    return left == L.left.size and right == L.right.size


def is_binary(L: Linking) -> bool:
    return all(l.size == 2 for l in L.links)


def boundary_blocks(L: Linking) -> list[list[int]]:
    """Each link as sorted positions on the boundary circle."""
    m, n = L.left.size, L.right.size
    return [sorted(list(l.left) + [m + n - 1 - y for y in l.right]) for l in L.links]


def _crosses(a: Sequence[int], b: Sequence[int]) -> bool:
    # two disjoint blocks cross iff their merged cyclic order alternates
    # in at least four runs
    merged = sorted([(v, 0) for v in a] + [(v, 1) for v in b])
    runs = 1
    for (_, s), (_, t) in zip(merged, merged[1:]):
        if s != t:
            runs += 1
    return runs >= 4


def is_planar(L: Linking) -> bool:
    blocks = boundary_blocks(L)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if _crosses(blocks[i], blocks[j]):
                return False
    return True


def failed_predicates(L: Linking, tag: FamilyTag) -> list[str]:
    """Names of the predicates ``L`` violates for ``tag`` (empty iff member)."""
    failed = []
    if tag.loopless and L.loops:
        failed.append("loopless")
    k = tag.kind
    if k is Kind.NAT:
        if L.left.size or L.right.size:
            failed.append("empty-objects")
        return failed
    if k in (Kind.PART, Kind.BRAU, Kind.TLIEB) and not is_total_linking(L):
        failed.append("total")
    if k in (Kind.BRAU, Kind.TLIEB) and not is_binary(L):
        failed.append("binary")
    if k is Kind.TLIEB and not is_planar(L):
        failed.append("planar")
    return failed


def member_of(L: Linking, tag: FamilyTag) -> bool:
    return not failed_predicates(L, tag)


def _union_blocks(blocks: list[set]) -> list[set]:
    # merge intersecting blocks until nothing changes
    blocks = [set(b) for b in blocks]
    changed = True
    while changed:
        changed = False
        out: list[set] = []
        for b in blocks:
            for c in out:
                if c & b:
                    c |= b
                    changed = True
                    break
            else:
                out.append(b)
        blocks = out
    return blocks


def naive_compose(S: Linking, R: Linking) -> tuple[Linking, int]:
    """Composite of partitions by equivalence closure on ``X + Y + Z``.

    Returns the restriction of the closure to ``X + Z`` and the number of
    classes lying entirely in ``Y``.  Shares no code with
    :mod:`linkcat.compose` and serves as its oracle.
    """
    for name, L in (("R", R), ("S", S)):
        if L.loops:
            raise LinkingError(f"{name} must be loopless")
        if not is_total_linking(L):
            raise LinkingError(f"{name} is not total, hence not a partition")
    if R.right.size != S.left.size:
        raise ValueError(f"interface mismatch: {R.right!r} vs {S.left!r}")
    blocks = [{("x", x) for x in l.left} | {("y", y) for y in l.right} for l in R.links]
    blocks += [{("y", y) for y in l.left} | {("z", z) for z in l.right} for l in S.links]
    closed = _union_blocks(blocks)
    m = R.left.size
    out, lam = [], 0
    for b in closed:
        outer = [x if side == "x" else m + x for side, x in b if side != "y"]
        if outer:
            out.append(outer)
        else:
            lam += 1
    return linking_from_blocks(m, S.right.size, out), lam


# -- enumeration -----------------------------------------------------------

DEFAULT_CAPS = {Kind.BRAU: 5, Kind.TLIEB: 7, Kind.PART: 3, Kind.LINK: 3, Kind.NAT: 0}


def set_partitions(points: Sequence) -> Iterator[list[list]]:
    """All set partitions, built by inserting one point at a time."""
    if not points:
        yield []
        return
    *rest, last = points
    for p in set_partitions(rest):
        yield p + [[last]]
        for i in range(len(p)):
            yield p[:i] + [p[i] + [last]] + p[i + 1:]


def perfect_matchings(points: Sequence) -> Iterator[list[tuple]]:
    if not points:
        yield []
        return
    first, rest = points[0], list(points[1:])
    for i, other in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def noncrossing_matchings(points: Sequence) -> Iterator[list[tuple]]:
    """Matchings of points listed in cyclic order with no two pairs interleaved."""
    if not points:
        yield []
        return
    for k in range(1, len(points), 2):
        for inner in noncrossing_matchings(points[1:k]):
            for outer in noncrossing_matchings(points[k + 1:]):
                yield [(points[0], points[k])] + inner + outer


def enumeration_cap(kind: Kind) -> int:
    env = os.environ.get("LINKCAT_MAX_ENUM")
    if env:
        return int(env)
    return DEFAULT_CAPS[kind]


def enumerate_family(tag: FamilyTag, n: int, cap: int | None = None) -> list[Linking]:
    """All loopless members of the endo-homset on ``n`` vertices, canonically sorted.

    ``cap`` (or the ``LINKCAT_MAX_ENUM`` environment variable) overrides the
    default size limits.
    """
    kind = tag.kind
    if cap is None:
        cap = enumeration_cap(kind)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise ValueError(f"enumeration of {tag} capped at n={cap}; got n={n} "
                         f"(raise with cap= or LINKCAT_MAX_ENUM)")
    pts = list(range(2 * n))
    if kind is Kind.NAT:
        out = [Linking.build(0, 0)]
    elif kind is Kind.PART:
        out = [linking_from_blocks(n, n, p) for p in set_partitions(pts)]
    elif kind is Kind.LINK:
        # an extra marker point collects the vertices that are in no link
        out = [linking_from_blocks(n, n, [b for b in p if 2 * n not in b])
               for p in set_partitions(pts + [2 * n])]
    elif kind is Kind.BRAU:
        out = [linking_from_blocks(n, n, m) for m in perfect_matchings(pts)]
    else:
        cyc = list(range(n)) + [n + j for j in reversed(range(n))]
        out = [linking_from_blocks(n, n, m) for m in noncrossing_matchings(cyc)]
    return sorted({L.key(): L for L in out}.values(), key=Linking.key)


def multiplication_table(elems: Sequence[Linking]) -> list[tuple[int, int, int, int]]:
    """Rows ``(i, j, k, lam)`` with ``elems[i] . elems[j] = loops^lam elems[k]``.

    The product applies ``elems[j]`` first, then ``elems[i]``.
    """
    if not elems:
        return []
    obj = elems[0].left.size
    index = {}
    for i, L in enumerate(elems):
        if L.left.size != obj or L.right.size != obj:
            raise ValueError(f"element {i} is not an endo-linking on {obj} vertices")
        if L.loops:
            raise ValueError(f"element {i} has loops")
        index[L.key()] = i
    table = []
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            prod, lam = compose_with_loops(a, b)
            k = index.get(flatten(prod).key())
            if k is None:
                raise ValueError(f"product of {i} and {j} is not among the elements")
            table.append((i, j, k, lam))
    return table

