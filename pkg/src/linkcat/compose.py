"""Composition of linkings by pullback.

Given ``L1: X -> Y`` with links ``A`` and ``L2: Y -> Z`` with links ``B``, a
synchronisation is a pair of link subsets ``(alpha, beta)`` whose footprints
on ``Y`` coincide; a path is a minimal non-empty one.  Paths are the links of
the composite.

Because no two links on the same side share a vertex, every interface vertex
touches at most one link above and one below.  Gluing links at shared
interface vertices therefore yields components in which each synchronisation
must be closed, and the paths are exactly the components with no dangling
interface vertex.  Loops of either input are singleton paths.
:func:`brute_force_syncs` enumerates synchronisations directly and is used
to check that characterisation.

Index conventions follow :func:`linkcat.linking.to_span`: ``A`` is the links
of ``L1`` followed by its loops, and likewise for ``B``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import irel
from .irel import InjRel, InterfaceError, VertexSet
from .linking import Link, Linking, LinkingError, to_span


class Sync(NamedTuple):
    upper: frozenset[int]
    lower: frozenset[int]

    def __bool__(self):
        return bool(self.upper or self.lower)

    def __or__(self, other):
        return Sync(self.upper | other.upper, self.lower | other.lower)

    def __and__(self, other):
        return Sync(self.upper & other.upper, self.lower & other.lower)

    def __sub__(self, other):
        return Sync(self.upper - other.upper, self.lower - other.lower)

    def __le__(self, other):
        return self.upper <= other.upper and self.lower <= other.lower

    def isdisjoint(self, other) -> bool:
        return self.upper.isdisjoint(other.upper) and self.lower.isdisjoint(other.lower)


Path = Sync

EMPTY_SYNC = Sync(frozenset(), frozenset())

BRUTE_FORCE_CAP = 20


def _check_composable(L1: Linking, L2: Linking):
    if not L1.right.matches(L2.left):
        raise InterfaceError(
            f"cannot compose: codomain {L1.right!r} of the first linking does "
            f"not match domain {L2.left!r} of the second")


def _components(L1: Linking, L2: Linking) -> list[tuple[list[int], list[int]]]:
    """Closed components of the gluing graph, as (upper, lower) link indices."""
    n = L1.right.size
    up = [-1] * n
    down = [-1] * n
    for i, link in enumerate(L1.links):
        for y in link.right:
            up[y] = i
    nu = len(L1.links)
    for j, link in enumerate(L2.links):
        for y in link.left:
            down[y] = j
    parent = list(range(nu + len(L2.links)))

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for y in range(n):
        u, d = up[y], down[y]
        if u >= 0 and d >= 0:
            ru, rd = find(u), find(nu + d)
            if ru != rd:
                parent[rd] = ru
    dead = set()
    for y in range(n):
        u, d = up[y], down[y]
        if u >= 0 and d < 0:
            dead.add(find(u))
        elif d >= 0 and u < 0:
            dead.add(find(nu + d))
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(len(parent)):
        r = find(v)
        if r in dead:
            continue
        g = groups.setdefault(r, ([], []))
        if v < nu:
            g[0].append(v)
        else:
            g[1].append(v - nu)
    return list(groups.values())


def paths(L1: Linking, L2: Linking) -> list[Path]:
    """All paths of the composite of ``L1: X -> Y`` followed by ``L2: Y -> Z``.

    Ordered by smallest element of ``A + B`` (elements of ``A`` first).
    """
    _check_composable(L1, L2)
    nA = L1.size
    out = [Sync(frozenset(u), frozenset(d)) for u, d in _components(L1, L2)]
    out += [Sync(frozenset((a,)), frozenset())
            for a in range(len(L1.links), nA)]
    out += [Sync(frozenset(), frozenset((b,)))
            for b in range(len(L2.links), L2.size)]
    out.sort(key=lambda s: min(s.upper) if s.upper else nA + min(s.lower))
    return out


def _compose(L2: Linking, L1: Linking) -> tuple[Linking, int]:
    _check_composable(L1, L2)
    links = []
    new_loops = 0
    up, down = L1.links, L2.links
    for us, ds in _components(L1, L2):
        left = [x for i in us for x in up[i].left]
        right = [z for j in ds for z in down[j].right]
        if left or right:
            left.sort()
            right.sort()
            links.append(Link(tuple(left), tuple(right)))
        else:
            new_loops += 1
    links.sort(key=Link.sort_key)
    out = Linking._trusted(L1.left, L2.right, links,
                           L1.loops + L2.loops + new_loops)
    return out, new_loops


def compose_link(L2: Linking, L1: Linking) -> Linking:
    """Composite ``L2 . L1: X -> Z``, collecting old and newly formed loops."""
    return _compose(L2, L1)[0]


def new_loop_count(L2: Linking, L1: Linking) -> int:
    """Number of loops formed while composing (paths with no outer vertex)."""
    return _compose(L2, L1)[1]


def compose_with_loops(L2: Linking, L1: Linking) -> tuple[Linking, int]:
    """``(compose_link(L2, L1), new_loop_count(L2, L1))`` in one pass."""
    return _compose(L2, L1)


def compose_flat(L2: Linking, L1: Linking) -> Linking:
    """Composition in the loopless category: loops formed are discarded."""
    for name, L in (("first", L1), ("second", L2)):
        if L.loops:
            raise LinkingError(
                f"loopless composition needs loopless inputs; the {name} "
                f"linking has {L.loops} loop(s)")
    out, _ = _compose(L2, L1)
    return Linking._trusted(out.left, out.right, out.links, 0)


def _y_footprints(L1: Linking, L2: Linking) -> tuple[list[int], list[int]]:
    fa = [sum(1 << y for y in l.right) for l in L1.links] + [0] * L1.loops
    fb = [sum(1 << y for y in l.left) for l in L2.links] + [0] * L2.loops
    return fa, fb


def is_synchronisation(L1: Linking, L2: Linking, s: Sync) -> bool:
    _check_composable(L1, L2)
    fa, fb = _y_footprints(L1, L2)
    for idx, n in ((s.upper, len(fa)), (s.lower, len(fb))):
        for i in idx:
            if not (0 <= i < n):
                raise IndexError(f"link index {i} out of range ({n} links)")
    top = 0
    for a in s.upper:
        top |= fa[a]
    bottom = 0
    for b in s.lower:
        bottom |= fb[b]
    return top == bottom


def _subset_footprints(masks: list[int]) -> list[tuple[int, int]]:
    # (subset bitmask, union of footprints) for every subset
    out = [(0, 0)]
    for i, m in enumerate(masks):
        bit = 1 << i
        out += [(s | bit, f | m) for s, f in out]
    return out


def _bits(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def brute_force_syncs(L1: Linking, L2: Linking) -> set[Sync]:
    """Every synchronisation, by exhaustive enumeration of ``A + B``.

    Test oracle; refuses inputs with more than 20 links and loops in total.
    """
    _check_composable(L1, L2)
    total = L1.size + L2.size
    if total > BRUTE_FORCE_CAP:
        raise ValueError(
            f"brute-force enumeration capped at {BRUTE_FORCE_CAP} links and "
            f"loops in total, got {total}")
    fa, fb = _y_footprints(L1, L2)
    lower_by_fp: dict[int, list[int]] = {}
    for s, f in _subset_footprints(fb):
        lower_by_fp.setdefault(f, []).append(s)
    out = set()
    for s, f in _subset_footprints(fa):
        for t in lower_by_fp.get(f, ()):
            out.add(Sync(_bits(s), _bits(t)))
    return out


def minimal_nonempty(syncs) -> list[Sync]:
    nonempty = [s for s in syncs if s]
    return [s for s in nonempty
            if not any(t != s and t <= s for t in nonempty)]


@dataclass(frozen=True)
class Pullback:
    """The pullback span ``A <- P -> B`` together with the composite it yields."""

    A: VertexSet
    B: VertexSet
    P: VertexSet
    paths: tuple[Path, ...]
    p: InjRel
    q: InjRel
    composite: Linking
    new_loops: int


def pullback(L1: Linking, L2: Linking) -> Pullback:
    ps = paths(L1, L2)
    A, B, P = VertexSet(L1.size), VertexSet(L2.size), VertexSet(len(ps))
    p = InjRel(P, A, frozenset((k, a) for k, s in enumerate(ps) for a in s.upper))
    q = InjRel(P, B, frozenset((k, b) for k, s in enumerate(ps) for b in s.lower))
    composite, new_loops = _compose(L2, L1)
    return Pullback(A, B, P, tuple(ps), p, q, composite, new_loops)


def mediating(L1: Linking, L2: Linking,
              cone: tuple[VertexSet, InjRel, InjRel]) -> InjRel:
    """The unique ``u: P' -> P`` with ``p . u = p'`` and ``q . u = q'``.

    ``cone`` is ``(P', p': P' -> A, q': P' -> B)`` and must commute over ``Y``.
    ``u(d)`` is the set of paths contained in ``p'(d) + q'(d)``.
    """
    Pc, pc, qc = cone
    pb = pullback(L1, L2)
    if not (pc.dom.matches(Pc) and qc.dom.matches(Pc)):
        raise InterfaceError(f"cone legs must both start at {Pc!r}")
    if not pc.cod.matches(pb.A):
        raise InterfaceError(f"cone leg p' must land in {pb.A!r}, got {pc.cod!r}")
    if not qc.cod.matches(pb.B):
        raise InterfaceError(f"cone leg q' must land in {pb.B!r}, got {qc.cod!r}")
    _, g = to_span(L1)
    h, _ = to_span(L2)
    if irel.compose(g, pc).pairs != irel.compose(h, qc).pairs:
        raise ValueError("cone does not commute: g . p' != h . q'")
    pairs = []
    for d in range(Pc.size):
        sigma = Sync(irel.image(pc, (d,)), irel.image(qc, (d,)))
        pairs += [(d, k) for k, s in enumerate(pb.paths) if s <= sigma]
    return InjRel(Pc, pb.P, frozenset(pairs))
