import random

import pytest

from conftest import random_signed
from revsort.perm import ContractViolation, frame, initial_candidates
from revsort.rev_graph import PLAIN, PRIMED, RevGraph, complement, node
from revsort.reversal_tree import ReversalTree

EXAMPLE = (0, -2, -5, 1, -4, 6, -3, 7)


def example():
    tree = ReversalTree(EXAMPLE)
    return RevGraph(tree, set(range(7))), tree


def label(x):
    return f"{x >> 1}" + ("'" if x & 1 else "")


def test_node_refs():
    assert node(3, PRIMED) == 7 and complement(node(3, PRIMED)) == node(3, PLAIN)


def test_build_example():
    g, _ = example()
    crossed = [i for i in range(7) if g.red_index.get((node(i, PLAIN), node(i + 1, PRIMED))) == i]
    assert crossed == [1, 5]
    assert len(g.blue) == 2 * (6 + 1)
    assert g.dyn.connected(0, 1)
    g.check_invariants()


def test_build_identity():
    g = RevGraph(ReversalTree(frame((1, 2, 3))), set())
    assert not g.red_present and g.find_active() is None
    assert not g.dyn.connected(0, 1)
    zero, prime = g.blue_paths()
    assert zero == [0, 2, 4, 6, 8] and prime == [1, 3, 5, 7, 9]


def test_build_two_crossings():
    g = RevGraph(ReversalTree((0, -1, 2)), {0, 1})
    assert g.red_index == {(0, 3): 0, (1, 2): 0, (2, 5): 1, (3, 4): 1}


def test_reconnection_example():
    g, tree = example()
    g.apply_reversal(2, 4)
    zero, _ = g.blue_paths()
    assert [label(x) for x in zero] == ["0", "2", "4'", "1'", "5'", "6", "3", "7"]
    new = {(4, 9), (5, 8), (11, 12), (10, 13)}  # {2,4'} {2',4} {5',6} {5,6'}
    assert new <= g.blue_edges()
    assert not {(4, 10), (5, 11), (8, 12), (9, 13)} & g.blue_edges()
    g.check_invariants()
    active = {i for i in g.red_present if tree.sign_of(i) != tree.sign_of(i + 1)}
    assert active == {0, 3}
    assert g.find_active() in {0, 3}


def test_reversal_involution_and_singletons():
    g, _ = example()
    before = g.blue_edges()
    g.apply_reversal(3, 3)
    g.check_invariants()
    g.apply_reversal(3, 3)
    assert g.blue_edges() == before
    g.apply_reversal(1, 6)
    g.apply_reversal(1, 6)
    assert g.blue_edges() == before


def test_remove_red():
    g, _ = example()
    assert g.find_active() in {1, 5}
    g.remove_red(1)
    assert g.find_active() == 5
    g.remove_red(5)
    assert g.find_active() is None and not g.dyn.connected(0, 1)
    with pytest.raises(ContractViolation):
        g.remove_red(5)


def test_straight_pairs_never_bridge():
    g, _ = example()
    g.remove_red(1)
    g.remove_red(5)
    for i in (0, 2, 3, 4, 6):
        g.remove_red(i)
        assert not g.dyn.connected(0, 1)


@pytest.mark.parametrize("seed", range(3))
def test_parity_and_activity_laws(seed):
    rng = random.Random(seed)
    n = 128
    perm = frame(random_signed(rng, n))
    tree = ReversalTree(perm)
    g = RevGraph(tree, initial_candidates(perm))
    for step in range(300):
        a = rng.randint(1, n)
        g.apply_reversal(a, rng.randint(a, n))
        if g.red_present and rng.random() < 0.1:
            g.remove_red(rng.choice(sorted(g.red_present)))
        if step % 50 == 0:
            g.check_invariants()
        zero = set(g.blue_paths()[0])
        for j in range(n + 2):
            even = tree.flip_count(j) % 2 == 0
            assert (node(j, PLAIN) in zero) == even
        active = {i for i in g.red_present if tree.sign_of(i) != tree.sign_of(i + 1)}
        found = g.find_active()
        assert (found is None) == (not active)
        assert found is None or found in active
