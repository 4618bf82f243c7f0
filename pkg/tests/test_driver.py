import random

import pytest
from hypothesis import given, settings

from conftest import random_signed, signed_perms
from revsort import sort
from revsort.driver import Sorter
from revsort.oracle import all_signed_permutations, bfs_distance, verify_script
from revsort.perm import (
    ContractViolation,
    InvalidInput,
    apply_reversal,
    build_overlap_graph,
    frame,
)


def test_sort_examples():
    assert sort((1, 2, 3)) == []
    assert sort((-1,)) == [(1, 1)]
    script = sort((2, 1))
    assert len(script) == 3 and verify_script((2, 1), script)
    assert sort(()) == []


def test_sort_rejects_bad_input():
    with pytest.raises(InvalidInput):
        sort((1, 1))


@pytest.mark.parametrize("n", range(0, 5))
def test_optimal_small_exhaustive_debug(n):
    for raw in all_signed_permutations(n):
        script = sort(raw, debug=True)
        assert verify_script(raw, script)
        assert len(script) == bfs_distance(frame(raw)), raw


def test_two_node_instance():
    s = Sorter(frame((-1,)))
    assert s.v_set == {0, 1}
    assert s.step_find_and_toggle()
    (i, iv), = s.s1
    assert i in (0, 1) and iv == (1, 1)
    assert s.tree.to_list() == [0, 1, 2]
    assert not s.v_set and not s.step_find_and_toggle()


def test_empty_candidates():
    s = Sorter(frame((1, 2)))
    assert not s.step_find_and_toggle()
    assert s.replay_s2() == []
    with pytest.raises(ContractViolation):
        s.step_undo()
    with pytest.raises(ContractViolation):
        s.s2_first_is_white()


@given(signed_perms(min_n=1, max_n=9))
@settings(max_examples=60)
def test_adjacency_scan(raw):
    s = Sorter(frame(raw))
    while True:
        before = set(s.v_set)
        cur = tuple(s.tree.to_list())
        if not s.step_find_and_toggle():
            break
        i, _ = s.s1[-1]
        g = build_overlap_graph(tuple(s.tree.to_list()))
        isolated = {v for v in range(len(g)) if g.is_isolated(v)}
        assert s.v_set == before - {i} - isolated
        assert len(before - s.v_set) <= 3
        assert g == build_overlap_graph(apply_reversal(cur, *s.s1[-1][1]))


def test_undo_restores_everything(rng):
    for _ in range(20):
        s = Sorter(frame(random_signed(rng, 12)))
        states = [(s.tree.to_list(), s.graph.blue_edges())]
        for _ in range(3):
            if not s.step_find_and_toggle():
                break
            states.append((s.tree.to_list(), s.graph.blue_edges()))
        while len(states) > 1 and len(s.s1) > 0:
            states.pop()
            s.step_undo()
            assert (s.tree.to_list(), s.graph.blue_edges()) == states[-1]
            s.check_invariants()


def test_s2_front_color():
    s = Sorter(frame((-2, 1, 3)))
    s.s2.appendleft(2)  # 1 and 2 differ in sign here
    assert not s.s2_first_is_white()
    s.s2[0] = 0  # 0 and 1 are both +
    assert s.s2_first_is_white()


@pytest.mark.parametrize("n", [6, 7])
def test_every_step_is_safe(n):
    rng = random.Random(n)
    for _ in range(25):
        raw = random_signed(rng, n)
        p = frame(raw)
        d = bfs_distance(p)
        for a, b in sort(raw):
            p = apply_reversal(p, a, b)
            assert bfs_distance(p) == d - 1
            d -= 1
        assert d == 0


@pytest.mark.parametrize("n", [20, 60, 150])
def test_debug_runs_and_budget(n):
    rng = random.Random(n)
    for _ in range(3):
        raw = random_signed(rng, n)
        s = Sorter(frame(raw), debug=n <= 60)
        script = s.run()
        assert verify_script(raw, script)
        c = s.counters
        assert c.toggles <= n + 1 and c.undos <= n + 1
        assert c.find_active <= 4 * (n + 1)


def test_epsilon_does_not_change_output(rng):
    raw = random_signed(rng, 200)
    assert sort(raw, epsilon=0.5) == sort(raw, epsilon=0.9)
