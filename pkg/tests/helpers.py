"""Oracles and random instance builders shared by the test modules."""
import itertools
import random

from linkcat import irel
from linkcat.compose import Sync, brute_force_syncs, pullback
from linkcat.irel import InjRel, VertexSet
from linkcat.linking import linking_from_blocks, random_linking


def all_injrels(a, z):
    """Every injective relation a -> z: each codomain element picks at most one preimage."""
    for pre in itertools.product(range(-1, a), repeat=z):
        yield frozenset((p, j) for j, p in enumerate(pre) if p >= 0)


def raw_compose(s, r):
    return frozenset((x, z) for x, y in r for y2, z in s if y == y2)


def monic_by_definition(m_pairs, a, max_w=2):
    """``m . f = m . g`` forces ``f = g`` for all injective ``f, g: W -> A``, ``|W| <= max_w``."""
    for w in range(max_w + 1):
        fs = list(all_injrels(w, a))
        for f in fs:
            mf = raw_compose(m_pairs, f)
            for g in fs:
                if f != g and mf == raw_compose(m_pairs, g):
                    return False
    return True


def random_pair(rng, max_vertices=6, max_links=6, max_loops=2):
    m, n, k = (rng.randint(0, max_vertices) for _ in range(3))
    return (random_linking(rng, m, n, max_links, max_loops=max_loops),
            random_linking(rng, n, k, max_links, max_loops=max_loops))


def random_partition(rng, m, n):
    labels = [rng.randrange(m + n) for _ in range(m + n)]
    blocks = {}
    for v, b in enumerate(labels):
        blocks.setdefault(b, []).append(v)
    return linking_from_blocks(m, n, list(blocks.values()))


def random_cone(rng, L1, L2, max_legs=4):
    """A commuting cone ``(P', p', q')`` built from pairwise disjoint synchronisations."""
    syncs = [s for s in brute_force_syncs(L1, L2) if s]
    syncs.sort(key=lambda s: (sorted(s.upper), sorted(s.lower)))
    rng.shuffle(syncs)
    chosen = []
    used = Sync(frozenset(), frozenset())
    for s in syncs:
        if len(chosen) == max_legs:
            break
        if s.isdisjoint(used) and rng.random() < 0.7:
            chosen.append(s)
            used = used | s
    # apex elements over the empty synchronisation are allowed too
    while len(chosen) < max_legs and rng.random() < 0.2:
        chosen.append(Sync(frozenset(), frozenset()))
    rng.shuffle(chosen)
    P = VertexSet(len(chosen))
    p = InjRel(P, VertexSet(L1.size), frozenset((d, a) for d, s in enumerate(chosen) for a in s.upper))
    q = InjRel(P, VertexSet(L2.size), frozenset((d, b) for d, s in enumerate(chosen) for b in s.lower))
    return P, p, q


def brute_force_mediators(L1, L2, cone):
    """All injective ``u: P' -> P`` with ``p . u = p'`` and ``q . u = q'``."""
    Pc, pc, qc = cone
    pb = pullback(L1, L2)
    out = []
    for pairs in all_injrels(Pc.size, pb.P.size):
        u = InjRel(Pc, pb.P, pairs)
        if irel.compose(pb.p, u) == pc and irel.compose(pb.q, u) == qc:
            out.append(u)
    return out


def closure_holds(syncs, max_pairs=4000, seed=0):
    """Union, intersection and difference stay inside ``syncs``; samples large sets."""
    items = sorted(syncs, key=lambda s: (sorted(s.upper), sorted(s.lower)))
    if len(items) ** 2 <= max_pairs:
        pairs = itertools.product(items, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(items), rng.choice(items)) for _ in range(max_pairs))
    return all(op in syncs for s, t in pairs for op in (s | t, s & t, s - t))


def paths_disjoint(ps):
    return all(s.isdisjoint(t) for s, t in itertools.combinations(ps, 2))


def decomposes(syncs, ps):
    """Every synchronisation is the disjoint union of the paths inside it."""
    for s in syncs:
        inside = [p for p in ps if p <= s]
        total = Sync(frozenset(), frozenset())
        for p in inside:
            total = total | p
        if total != s or sum(len(p.upper) + len(p.lower) for p in inside) != len(s.upper) + len(s.lower):
            return False
    return True


def stability_holds(R, family):
    """Images preserve unions, intersections and differences of subsets."""
    img = [irel.image(R, s) for s in family]
    for (a, ia), (b, ib) in itertools.product(zip(family, img), repeat=2):
        if irel.image(R, a | b) != ia | ib:
            return False
        if irel.image(R, a & b) != ia & ib:
            return False
        if irel.image(R, a - b) != ia - ib:
            return False
        if (a <= b) and not ia <= ib:
            return False
    return True


def random_injrel(rng, max_size=6):
    a, z = rng.randint(0, max_size), rng.randint(0, max_size)
    pre = [rng.randint(-1, a - 1) for _ in range(z)]
    return InjRel(VertexSet(a), VertexSet(z), frozenset((p, j) for j, p in enumerate(pre) if p >= 0))


# -- independent counting oracles -------------------------------------------

def restricted_growth_strings(k):
    """Set partitions of ``range(k)`` as block-label strings ``a[0]=0, a[i] <= max(a[:i]) + 1``."""
    if k == 0:
        yield ()
        return
    for rgs in restricted_growth_strings(k - 1):
        top = max(rgs, default=-1)
        for b in range(top + 2):
            yield rgs + (b,)


def rgs_blocks(rgs):
    blocks = {}
    for v, b in enumerate(rgs):
        blocks.setdefault(b, []).append(v)
    return list(blocks.values())


def matchings_by_filter(k):
    """Perfect matchings of ``range(k)``: partitions whose blocks are all pairs."""
    for rgs in restricted_growth_strings(k):
        blocks = rgs_blocks(rgs)
        if all(len(b) == 2 for b in blocks):
            yield blocks


def double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def catalan(n):
    c = [1]
    for i in range(n):
        c.append(sum(c[j] * c[i - j] for j in range(i + 1)))
    return c[n]


def bell(n):
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
