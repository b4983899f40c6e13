"""Unit-free multiplicative proof nets, composed through linkings.

Formulas are in negation normal form.  Concrete syntax::

    atom := ident | ident "^"
    expr := atom | "(" expr "*" expr ")" | "(" expr "@" expr ")"

with ``*`` for tensor and ``@`` for par.  A net ``X -> Y`` lives on the
formula ``dual(X) @ Y``; its leaves are those of ``X`` followed by those of
``Y``, and its axioms form a linking from the leaves of ``X`` to the leaves
of ``Y``.  Composition is plain pullback composition of these linkings.

>>> str(parse_formula("((a @ b) * c^)"))
'((a @ b) * c^)'
>>> str(dual(parse_formula("(a * b)")))
'(a^ @ b^)'
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .compose import compose_with_loops
from .families import is_binary, is_total_linking
from .linking import Link, Linking, flatten

DR_PAR_CAP = 20


@dataclass(frozen=True)
class Atom:
    name: str
    positive: bool = True

    def __str__(self):
        return self.name if self.positive else self.name + "^"


@dataclass(frozen=True)
class Tensor:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Par:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"({self.left} @ {self.right})"


Formula = Union[Atom, Tensor, Par]


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1):
            toks.append(("id", m.group(1), m.start(1)))
        elif m.group(2):
            ch = m.group(2)
            if ch not in "()*@^":
                raise FormulaSyntaxError(f"unexpected character {ch!r}", m.start(2))
            toks.append((ch, ch, m.start(2)))
        pos = m.end()
    return toks


def parse_formula(text: str) -> Formula:
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else ("eof", "", len(text))

    def take(kind):
        nonlocal pos
        tok = peek()
        if tok[0] != kind:
            want = "identifier" if kind == "id" else repr(kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {want}, got {got}", tok[2])
        pos += 1
        return tok

    def expr():
        tok = peek()
        if tok[0] == "id":
            take("id")
            negated = peek()[0] == "^"
            if negated:
                take("^")
            return Atom(tok[1], not negated)
        take("(")
        left = expr()
        op = peek()
        if op[0] not in ("*", "@"):
            got = "end of input" if op[0] == "eof" else repr(op[1])
            raise FormulaSyntaxError(f"expected '*' or '@', got {got}", op[2])
        pos_op = op[0]
        take(pos_op)
        right = expr()
        take(")")
        if peek()[0] == "^":
            raise FormulaSyntaxError(
                "negation applies to atoms only (use negation normal form)",
                peek()[2])
        return Tensor(left, right) if pos_op == "*" else Par(left, right)

    out = expr()
    if pos != len(toks):
        raise FormulaSyntaxError(f"unexpected {peek()[1]!r}", peek()[2])
    return out


def dual(F: Formula) -> Formula:
    if isinstance(F, Atom):
        return Atom(F.name, not F.positive)
    if isinstance(F, Tensor):
        return Par(dual(F.left), dual(F.right))
    return Tensor(dual(F.left), dual(F.right))


def leaves(F: Formula) -> list[Atom]:
    out = []
    stack = [F]
    while stack:
        G = stack.pop()
        if isinstance(G, Atom):
            out.append(G)
        else:
            stack.append(G.right)
            stack.append(G.left)
    return out


def complementary(a: Atom, b: Atom) -> bool:
    return a.name == b.name and a.positive != b.positive


class NetError(ValueError):
    """Axioms are not a complementary perfect matching of the leaves."""


class InvariantViolation(AssertionError):
    """Composition of correct nets broke a guaranteed property (a bug)."""


@dataclass(frozen=True)
class ProofStructure:
    """A formula with axiom pairs on its leaf indices (not necessarily correct)."""

    formula: Formula
    axioms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ls = leaves(self.formula)
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.axioms))
        seen = set()
        for i, j in pairs:
            for v in (i, j):
                if not (0 <= v < len(ls)):
                    raise NetError(f"leaf index {v} out of range ({len(ls)} leaves)")
                if v in seen:
                    raise NetError(f"leaf {v} is in more than one axiom")
                seen.add(v)
            if not complementary(ls[i], ls[j]):
                raise NetError(f"axiom {i}-{j} joins {ls[i]} and {ls[j]}, "
                               f"which are not complementary")
        if len(seen) != len(ls):
            missing = sorted(set(range(len(ls))) - seen)
            raise NetError(f"leaves {missing} are in no axiom")
        object.__setattr__(self, "axioms", pairs)


@dataclass(frozen=True)
class ProofNet:
    """Cut-free net on ``dual(source) @ target`` with its axioms as a linking."""

    source: Formula
    target: Formula
    axioms: Linking

    def __post_init__(self):
        nx, ny = len(leaves(self.source)), len(leaves(self.target))
        L = self.axioms
        if (L.left.size, L.right.size) != (nx, ny):
            raise NetError(f"axiom linking is {L.left.size}->{L.right.size}, "
                           f"formulas have {nx} and {ny} leaves")
        if L.loops:
            raise NetError("a cut-free net has no loops")
        if not (is_total_linking(L) and is_binary(L)):
            raise NetError("axioms must match every leaf with exactly one other")
        # complementarity is checked on the conclusion
        self.structure

    @classmethod
    def from_pairs(cls, source: Formula, target: Formula,
                   pairs: Iterable[Sequence[int]]) -> ProofNet:
        """Build from axiom pairs given as leaf indices of ``dual(source) @ target``."""
        nx = len(leaves(source))
        links = []
        for p in pairs:
            if len(p) != 2:
                raise NetError(f"axiom {list(p)} must have exactly two leaves")
            links.append(Link.of([v for v in p if v < nx], [v - nx for v in p if v >= nx]))
        if sum(l.size for l in links) != 2 * len(links):
            raise NetError("axiom pairs must use two distinct leaves")
        axioms = Linking.build(nx, len(leaves(target)), links)
        return cls(source, target, axioms)

    @property
    def conclusion(self) -> Formula:
        return Par(dual(self.source), self.target)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        nx = self.axioms.left.size
        return tuple(tuple(sorted(list(l.left) + [nx + y for y in l.right]))
                     for l in self.axioms.links)

    @property
    def structure(self) -> ProofStructure:
        return ProofStructure(self.conclusion, self.pairs)


def identity_net(F: Formula) -> ProofNet:
    n = len(leaves(F))
    return ProofNet.from_pairs(F, F, [(i, n + i) for i in range(n)])


def _switching_data(F: Formula):
    """Nodes, fixed tree edges, par premise-edge pairs, and leaf node ids."""
    fixed, pars, leaf_nodes = [], [], []
    count = 0

    def walk(G):
        nonlocal count
        me = count
        count += 1
        if isinstance(G, Atom):
            leaf_nodes.append(me)
            return me
        a, b = walk(G.left), walk(G.right)
        if isinstance(G, Tensor):
            fixed.extend([(me, a), (me, b)])
        else:
            pars.append(((me, a), (me, b)))
        return me

    walk(F)
    return count, fixed, pars, leaf_nodes


def _find(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def dr_correct(net: ProofNet | ProofStructure) -> bool:
    """Danos-Regnier: every switching graph is a tree.

    A switching keeps exactly one premise edge of each par node; all other
    formula-tree edges and all axiom edges stay.  Enumerates the switchings,
    so refuses formulas with more than 20 par nodes.
    """
    st = net.structure if isinstance(net, ProofNet) else net
    n_nodes, fixed, pars, leaf_nodes = _switching_data(st.formula)
    if len(pars) > DR_PAR_CAP:
        raise ValueError(f"{len(pars)} par nodes exceed the switching cap of "
                         f"{DR_PAR_CAP}; try a smaller net")
    edges = fixed + [(leaf_nodes[i], leaf_nodes[j]) for i, j in st.axioms]
    # a tree on n nodes has n - 1 edges
    if len(edges) + len(pars) != n_nodes - 1:
        return False
    parent = list(range(n_nodes))
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[rv] = ru
    for choice in itertools.product((0, 1), repeat=len(pars)):
        p = parent[:]
        for par, c in zip(pars, choice):
            u, v = par[c]
            ru, rv = _find(p, u), _find(p, v)
            if ru == rv:
                return False
            p[rv] = ru
    return True


def compose_nets(n2: ProofNet, n1: ProofNet, check: bool = True) -> ProofNet:
    """Cut elimination of ``n1: X -> Y`` against ``n2: Y -> Z``, by pullback.

    With ``check`` the inputs must be DR-correct.  Correct inputs never form
    loops and every path has two outer leaves; a violation raises
    :class:`InvariantViolation`.
    """
    if n1.target != n2.source:
        raise ValueError(f"cannot compose: {n1.target} is not {n2.source}")
    if check:
        for name, n in (("first", n1), ("second", n2)):
            if not dr_correct(n):
                raise ValueError(f"the {name} net is not DR-correct")
    composite, lam = compose_with_loops(n2.axioms, n1.axioms)
    if lam:
        raise InvariantViolation(f"composition formed {lam} loop(s)")
    for link in composite.links:
        if link.size != 2:
            raise InvariantViolation(f"path with {link.size} outer leaves: {link}")
    try:
        return ProofNet(n1.source, n2.target, composite)
    except NetError as e:
        raise InvariantViolation(str(e)) from e


def forget_brauer(net: ProofNet) -> Linking:
    """Leaves and axiom links as a (looped) Brauer linking."""
    return net.axioms


def forget_brauer_flat(net: ProofNet) -> Linking:
    return flatten(net.axioms)


# -- random generation -----------------------------------------------------

def random_formula(rng: random.Random, n_leaves: int, atoms: str = "abc") -> Formula:
    if n_leaves == 1:
        return Atom(rng.choice(atoms), rng.random() < 0.5)
    k = rng.randint(1, n_leaves - 1)
    left = random_formula(rng, k, atoms)
    right = random_formula(rng, n_leaves - k, atoms)
    return Tensor(left, right) if rng.random() < 0.5 else Par(left, right)


class _Proof:
    """Sequent under construction: a principal formula plus side formulas.

    Formulas are trees of ``("atom", leaf_id)``, ``("*", l, r)``, ``("@", l, r)``.
    """

    def __init__(self, main, side, axioms):
        self.main, self.side, self.axioms = main, side, axioms


def _grow(rng, F: Formula, atoms: dict, extra: float, alphabet: str) -> _Proof:
    """Random cut-free proof of ``|- F, Gamma`` with freely chosen ``Gamma``."""
    if isinstance(F, Atom):
        i, j = len(atoms), len(atoms) + 1
        atoms[i], atoms[j] = F, dual(F)
        pf = _Proof(("atom", i), [("atom", j)], [(i, j)])
    else:
        pa = _grow(rng, F.left, atoms, extra, alphabet)
        pb = _grow(rng, F.right, atoms, extra, alphabet)
        if isinstance(F, Tensor):
            pf = _Proof(("*", pa.main, pb.main), pa.side + pb.side, pa.axioms + pb.axioms)
        else:
            # par needs both premises in one sequent: tensor two side formulas first
            fa = pa.side.pop(rng.randrange(len(pa.side)))
            fb = pb.side.pop(rng.randrange(len(pb.side)))
            joined = ("*", fa, fb) if rng.random() < 0.5 else ("*", fb, fa)
            pf = _Proof(("@", pa.main, pb.main), pa.side + pb.side + [joined],
                        pa.axioms + pb.axioms)
    if rng.random() < extra:
        # tensor a fresh axiom into a side formula
        c = Atom(rng.choice(alphabet), rng.random() < 0.5)
        i, j = len(atoms), len(atoms) + 1
        atoms[i], atoms[j] = c, dual(c)
        k = rng.randrange(len(pf.side))
        f = pf.side[k]
        pf.side[k] = ("*", f, ("atom", i)) if rng.random() < 0.5 else ("*", ("atom", i), f)
        pf.side.append(("atom", j))
        pf.axioms.append((i, j))
    if len(pf.side) >= 2 and rng.random() < extra:
        a, b = rng.sample(range(len(pf.side)), 2)
        merged = ("@", pf.side[a], pf.side[b])
        pf.side = [s for k, s in enumerate(pf.side) if k not in (a, b)] + [merged]
    return pf


def _fold_par(rng, trees: list):
    trees = trees[:]
    rng.shuffle(trees)
    while len(trees) > 1:
        k = rng.randrange(len(trees) - 1)
        trees[k:k + 2] = [("@", trees[k], trees[k + 1])]
    return trees[0]


def _to_formula(tree, atoms) -> tuple[Formula, list[int]]:
    if tree[0] == "atom":
        return atoms[tree[1]], [tree[1]]
    left, il = _to_formula(tree[1], atoms)
    right, ir = _to_formula(tree[2], atoms)
    return (Tensor if tree[0] == "*" else Par)(left, right), il + ir


def _net_from_proof(rng, pf: _Proof, atoms, main_is_target: bool) -> ProofNet:
    rest, rest_ids = _to_formula(_fold_par(rng, pf.side), atoms)
    main, main_ids = _to_formula(pf.main, atoms)
    if main_is_target:
        # |- dual(X), Y with dual(X) the folded side formulas
        source, target, order = dual(rest), main, rest_ids + main_ids
    else:
        # main is dual(Y): |- dual(Y), Z
        source, target, order = dual(main), rest, main_ids + rest_ids
    pos = {leaf: k for k, leaf in enumerate(order)}
    return ProofNet.from_pairs(source, target, [(pos[i], pos[j]) for i, j in pf.axioms])


def random_net_into(rng: random.Random, target: Formula, extra: float = 0.3,
                    alphabet: str = "abc") -> ProofNet:
    """Random correct net ``X -> target`` for a freshly generated ``X``."""
    atoms: dict = {}
    pf = _grow(rng, target, atoms, extra, alphabet)
    return _net_from_proof(rng, pf, atoms, main_is_target=True)


def random_net_from(rng: random.Random, source: Formula, extra: float = 0.3,
                    alphabet: str = "abc") -> ProofNet:
    """Random correct net ``source -> Z`` for a freshly generated ``Z``."""
    atoms: dict = {}
    pf = _grow(rng, dual(source), atoms, extra, alphabet)
    return _net_from_proof(rng, pf, atoms, main_is_target=False)


def random_composable_pair(rng: random.Random, max_leaves: int = 10,
                           max_interface: int = 3) -> tuple[ProofNet, ProofNet]:
    """``(n1: X -> Y, n2: Y -> Z)``, both correct, each with at most ``max_leaves`` leaves."""
    while True:
        Y = random_formula(rng, rng.randint(1, max_interface))
        n1 = random_net_into(rng, Y)
        n2 = random_net_from(rng, Y)
        if (len(n1.structure.axioms) * 2 <= max_leaves
                and len(n2.structure.axioms) * 2 <= max_leaves):
            return n1, n2
