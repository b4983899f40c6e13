import random

import pytest

from linkcat.compose import compose_flat, compose_with_loops
from linkcat.families import FamilyTag, member_of
from linkcat.linking import identity_linking
from linkcat.mll import (Atom, FormulaSyntaxError, InvariantViolation, NetError,
                         Par, ProofNet, ProofStructure, Tensor, compose_nets, dr_correct,
                         dual, forget_brauer, forget_brauer_flat, identity_net, leaves,
                         parse_formula, random_composable_pair, random_formula,
                         random_net_from, random_net_into)

a, a_ = Atom("a", True), Atom("a", False)


def F(text):
    return parse_formula(text)


def net(source, target, pairs):
    return ProofNet.from_pairs(F(source), F(target), pairs)


def test_parse_examples():
    assert F("a") == a
    assert F("(a * a^)") == Tensor(a, a_)
    assert F("((a @ b) * c^)") == Tensor(Par(a, Atom("b", True)), Atom("c", False))
    assert F("  ( a*  b )") == Tensor(a, Atom("b", True))


@pytest.mark.parametrize("text, pos", [
    ("(a * b", 6), ("(a b)", 3), ("(a * b)^", 7), ("", 0), ("a)", 1), ("(a * b * c)", 7),
])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(FormulaSyntaxError) as e:
        F(text)
    assert e.value.position == pos


def test_str_round_trip():
    for seed in range(50):
        G = random_formula(random.Random(seed), 1 + seed % 7)
        assert F(str(G)) == G


def test_dual():
    assert dual(a) == a_
    assert dual(F("(a * b)")) == F("(a^ @ b^)")
    for seed in range(50):
        G = random_formula(random.Random(seed), 1 + seed % 7)
        assert dual(dual(G)) == G
        assert [l.positive for l in leaves(dual(G))] == [not l.positive for l in leaves(G)]


def test_proof_structure_validation():
    with pytest.raises(NetError, match="not complementary"):
        ProofStructure(F("(a @ b^)"), ((0, 1),))
    with pytest.raises(NetError, match="no axiom"):
        ProofStructure(F("((a @ a^) @ b)"), ((0, 1),))
    with pytest.raises(NetError, match="more than one"):
        ProofStructure(F("((a @ a^) @ a)"), ((0, 1), (1, 2)))


def test_dr_examples():
    assert dr_correct(ProofStructure(F("(a^ @ a)"), ((0, 1),)))
    assert not dr_correct(ProofStructure(F("(a * a^)"), ((0, 1),)))
    assert dr_correct(identity_net(F("(a * b)")))
    # connected but cyclic once both par premises are kept apart
    assert not dr_correct(ProofStructure(F("((a^ @ a) @ (b^ @ b))"), ((0, 1), (2, 3))))
    assert dr_correct(ProofStructure(F("((a^ * b^) @ (a @ b))"), ((0, 2), (1, 3))))
    assert not dr_correct(ProofStructure(F("((a^ @ b^) @ (a @ b))"), ((0, 2), (1, 3))))


def test_dr_cap():
    G = F("(a^ @ a)")
    for _ in range(20):
        G = Par(G, F("(a^ @ a)"))
    pairs = tuple((2 * i, 2 * i + 1) for i in range(21))
    with pytest.raises(ValueError, match="cap"):
        dr_correct(ProofStructure(G, pairs))


def test_identity_net():
    n = identity_net(a)
    assert forget_brauer(n) == identity_linking(1)
    assert compose_nets(n, n) == n


def test_zig_zag_composition():
    n1 = net("a", "((a * b) @ b^)", [(0, 1), (2, 3)])
    n2 = net("((a * b) @ b^)", "(b^ @ (a * b))", [(0, 4), (1, 5), (2, 3)])
    assert dr_correct(n1) and dr_correct(n2)
    out = compose_nets(n2, n1)
    assert out.pairs == ((0, 2), (1, 3))
    assert str(out.target) == "(b^ @ (a * b))"
    assert dr_correct(out)


def test_symmetry_is_an_involution():
    sym = net("(a * b)", "(b * a)", [(0, 3), (1, 2)])
    back = net("(b * a)", "(a * b)", [(0, 3), (1, 2)])
    assert compose_nets(back, sym) == identity_net(F("(a * b)"))


def test_composition_errors():
    with pytest.raises(ValueError, match="cannot compose"):
        compose_nets(identity_net(a), identity_net(F("b")))
    bad = net("(b * (a @ a^))", "b", [(0, 3), (1, 2)])
    assert not dr_correct(bad)
    with pytest.raises(ValueError, match="not DR-correct"):
        compose_nets(bad, identity_net(bad.source))


def test_incorrect_nets_can_form_loops():
    n1 = net("b", "(b * (a @ a^))", [(0, 1), (2, 3)])
    n2 = net("(b * (a @ a^))", "b", [(0, 3), (1, 2)])
    assert dr_correct(n1) and not dr_correct(n2)
    _, lam = compose_with_loops(n2.axioms, n1.axioms)
    assert lam == 1
    with pytest.raises(InvariantViolation, match="loop"):
        compose_nets(n2, n1, check=False)


def test_net_validation():
    with pytest.raises(NetError):
        net("a", "b", [(0, 1)])
    with pytest.raises(NetError):
        net("a", "a", [(0, 0)])


def test_random_nets_are_correct_and_brauer():
    rng = random.Random(1)
    brau = FamilyTag.parse("brau-flat")
    for _ in range(200):
        Y = random_formula(rng, rng.randint(1, 4))
        for n in (random_net_into(rng, Y), random_net_from(rng, Y)):
            assert dr_correct(n)
            assert member_of(forget_brauer(n), brau)
        assert random_net_into(rng, Y).target == Y
        assert random_net_from(rng, Y).source == Y


def test_random_composition_properties():
    rng = random.Random(2)
    for _ in range(200):
        n1, n2 = random_composable_pair(rng, max_leaves=10)
        assert len(leaves(n1.conclusion)) <= 10 and len(leaves(n2.conclusion)) <= 10
        L, lam = compose_with_loops(n2.axioms, n1.axioms)
        assert lam == 0
        assert all(l.size == 2 for l in L.links)
        out = compose_nets(n2, n1)
        assert dr_correct(out)
        assert forget_brauer(out) == L
        assert forget_brauer_flat(out) == compose_flat(forget_brauer_flat(n2), forget_brauer_flat(n1))


def test_associativity_of_net_composition():
    rng = random.Random(4)
    for _ in range(100):
        n1, n2 = random_composable_pair(rng, max_leaves=8)
        n3 = random_net_from(rng, n2.target)
        if len(leaves(n3.conclusion)) > 8:
            continue
        assert compose_nets(n3, compose_nets(n2, n1)) == compose_nets(compose_nets(n3, n2), n1)
