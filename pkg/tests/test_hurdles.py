import pytest

from revsort.hurdles import analyse, clear_white_components, cycle_count, reversal_distance
from revsort.oracle import all_signed_permutations, bfs_distance
from revsort.perm import apply_script, build_overlap_graph, frame


def test_nothing_to_clear():
    ident = frame((1, 2, 3))
    assert clear_white_components(ident) == ([], ident)
    oriented = frame((-3, -1, 4, 5, 2))
    assert clear_white_components(oriented) == ([], oriented)


def test_single_hurdle_is_cut():
    p = frame((2, 1))
    info = analyse(p)
    assert len(info.hurdles) == 1 and not info.fortress
    prefix, q = clear_white_components(p)
    assert len(prefix) == 1
    assert bfs_distance(q) == 2
    assert not build_overlap_graph(q).unoriented_components()


def test_cycles_of_identity_are_trivial():
    assert cycle_count(frame((1, 2, 3))) == 4
    assert cycle_count(frame((-1,))) == 1


@pytest.mark.parametrize("n", range(0, 6))
def test_distance_formula_exhaustive(n):
    for raw in all_signed_permutations(n):
        p = frame(raw)
        assert reversal_distance(p) == bfs_distance(p), raw


@pytest.mark.parametrize("n", range(1, 7))
def test_clearing_postconditions(n):
    for raw in all_signed_permutations(n):
        p = frame(raw)
        prefix, q = clear_white_components(p)
        assert apply_script(p, prefix) == q
        assert not build_overlap_graph(q).unoriented_components()
        assert bfs_distance(q) == bfs_distance(p) - len(prefix)
