"""Colouring objects, the four checkers, and colouring files."""

import itertools
import random

import pytest

from oracles import ok_acyclic, ok_circular, ok_tree, random_digraphs, window
from stardi import (
    CircularColouring,
    Digraph,
    Graph,
    ParseError,
    Violation,
    check_acyclic_kd,
    check_circular_kd,
    check_partition_k,
    check_tree_kd,
    circulant,
    complete,
    dicycle,
    parse_colouring,
    serialize_colouring,
    symmetric,
    underlying_graph,
)


def cycle_graph(n: int) -> Graph:
    return underlying_graph(dicycle(n))


def test_colouring_validation():
    c = CircularColouring(3, 2, [0, 1, 2])
    assert c.colours == (0, 1, 2)
    with pytest.raises(ValueError):
        CircularColouring(3, 0, [0])
    with pytest.raises(ValueError):
        CircularColouring(3, 4, [0])
    with pytest.raises(ValueError):
        CircularColouring(3, 2, [0, 3])
    with pytest.raises(ValueError):
        CircularColouring(3, 2, [0, -1])


def test_rotated_and_reflected():
    c = CircularColouring(5, 2, [0, 1, 4])
    assert c.rotated(2).colours == (2, 3, 1)
    assert c.reflected().colours == (0, 4, 1)


def test_checkers_require_total_colourings():
    with pytest.raises(ValueError, match="partial"):
        check_acyclic_kd(dicycle(3), CircularColouring(3, 2, [0, 1]))


# ----------------------------------------------------------------------------
# worked instances


def test_acyclic_kd_on_dicycle_3():
    D = dicycle(3)
    assert check_acyclic_kd(D, CircularColouring(3, 2, [0, 1, 2])) is None
    bad = check_acyclic_kd(D, CircularColouring(3, 2, [0, 0, 1]))
    assert bad is not None
    assert bad.kind == "cyclic-window"
    assert bad.window == 0  # {0,1} covers all three vertices


def test_acyclic_and_circular_on_circulant_5_2():
    D = circulant(5, 2)
    ident = CircularColouring(5, 2, range(5))
    assert check_acyclic_kd(D, ident) is None
    assert check_circular_kd(D, ident) is None


def test_circular_short_arc():
    bad = check_circular_kd(dicycle(3), CircularColouring(5, 2, [0, 2, 4]))
    assert bad is not None
    assert bad.kind == "short-arc"
    assert bad.arc == (2, 0)  # difference 1 on the wrap-around arc
    assert "(2, 0)" in str(bad)


def test_circular_cyclic_class_on_digon():
    digon = Digraph(2, [(0, 1), (1, 0)])
    bad = check_circular_kd(digon, CircularColouring(2, 1, [0, 0]))
    assert bad is not None
    assert bad.kind == "cyclic-class"
    assert bad.colour_class == 0
    assert set(bad.cycle) == {0, 1}


def test_partition_check():
    D = dicycle(3)
    assert check_partition_k(D, CircularColouring(2, 1, [0, 0, 1])) is None
    bad = check_partition_k(D, CircularColouring(1, 1, [0, 0, 0]))
    assert bad is not None
    with pytest.raises(ValueError, match="d = 1"):
        check_partition_k(D, CircularColouring(3, 2, [0, 1, 2]))


def test_tree_kd_instances():
    assert check_tree_kd(cycle_graph(4), CircularColouring(4, 3, range(4))) is None
    K3 = complete(3)
    assert check_tree_kd(K3, CircularColouring(3, 2, range(3))) is None
    bad = check_tree_kd(K3, CircularColouring(2, 2, [0, 1, 0]))
    assert bad is not None
    assert bad.kind == "cyclic-window-undirected"
    assert bad.window == 0  # width-2 window of Z_2 holds every vertex


# ----------------------------------------------------------------------------
# checker semantics against the independent referees


def _colourings(n: int, k: int, rng: random.Random, count: int):
    for _ in range(count):
        yield tuple(rng.randrange(k) for _ in range(n))


def test_acyclic_checker_matches_referee():
    rng = random.Random(7)
    for D in random_digraphs(25, 6):
        for k, d in ((3, 2), (5, 2), (4, 3)):
            for cols in _colourings(D.n, k, rng, 8):
                got = check_acyclic_kd(D, CircularColouring(k, d, cols))
                assert (got is None) == ok_acyclic(D, k, d, cols)


def test_circular_checker_matches_referee():
    rng = random.Random(8)
    for D in random_digraphs(25, 6):
        for k, d in ((3, 2), (5, 2), (4, 3)):
            for cols in _colourings(D.n, k, rng, 8):
                got = check_circular_kd(D, CircularColouring(k, d, cols))
                assert (got is None) == ok_circular(D, k, d, cols)


def test_tree_checker_matches_referee():
    rng = random.Random(9)
    for D in random_digraphs(25, 6):
        G = underlying_graph(D)
        for k, d in ((3, 2), (5, 2), (4, 3)):
            for cols in _colourings(G.n, k, rng, 8):
                got = check_tree_kd(G, CircularColouring(k, d, cols))
                assert (got is None) == ok_tree(G, k, d, cols)


def test_rotation_preserves_all_three_notions():
    rng = random.Random(10)
    for D in random_digraphs(20, 6):
        G = underlying_graph(D)
        for cols in _colourings(D.n, 5, rng, 6):
            c = CircularColouring(5, 2, cols)
            for r in range(5):
                rc = c.rotated(r)
                assert (check_acyclic_kd(D, rc) is None) == (
                    check_acyclic_kd(D, c) is None
                )
                assert (check_circular_kd(D, rc) is None) == (
                    check_circular_kd(D, c) is None
                )
                assert (check_tree_kd(G, rc) is None) == (check_tree_kd(G, c) is None)


def test_reflection_preserves_window_notions():
    rng = random.Random(11)
    for D in random_digraphs(20, 6):
        G = underlying_graph(D)
        for cols in _colourings(D.n, 5, rng, 6):
            c = CircularColouring(5, 2, cols)
            rc = c.reflected()
            assert (check_acyclic_kd(D, rc) is None) == (check_acyclic_kd(D, c) is None)
            assert (check_tree_kd(G, rc) is None) == (check_tree_kd(G, c) is None)


def test_reflection_can_break_the_arc_rule():
    # forward difference 4 at k=5, d=2 reflects to 1, under the threshold
    D = Digraph(2, [(0, 1)])
    c = CircularColouring(5, 2, [0, 4])
    assert check_circular_kd(D, c) is None
    assert check_circular_kd(D, c.reflected()) is not None


def test_circular_implies_acyclic():
    rng = random.Random(12)
    for D in random_digraphs(30, 7):
        for k, d in ((4, 2), (5, 2), (7, 3)):
            for cols in _colourings(D.n, k, rng, 6):
                c = CircularColouring(k, d, cols)
                if check_circular_kd(D, c) is None:
                    assert check_acyclic_kd(D, c) is None


def test_symmetric_digraphs_collapse_the_two_notions():
    # on a digon-symmetric digraph both notions say: every edge's colours sit
    # at circular distance >= d
    for G in (complete(3), cycle_graph(5)):
        D = symmetric(G)
        for k in range(2, 7):
            for d in range(1, k + 1):
                for cols in itertools.product(range(k), repeat=G.n):
                    c = CircularColouring(k, d, cols)
                    a = check_acyclic_kd(D, c) is None
                    b = check_circular_kd(D, c) is None
                    dist_ok = all(
                        min((cols[u] - cols[w]) % k, (cols[w] - cols[u]) % k) >= d
                        for u, w in G.edges
                    )
                    assert a == b == dist_ok


def test_violation_witnesses_are_genuine():
    rng = random.Random(13)
    arcs = {}
    for D in random_digraphs(25, 6):
        arcs[id(D)] = set(D.arcs)
        for cols in _colourings(D.n, 4, rng, 8):
            c = CircularColouring(4, 2, cols)
            v = check_acyclic_kd(D, c)
            if v is not None:
                assert all(cols[x] in window(v.window, 4, 2) for x in v.cycle)
                for i, x in enumerate(v.cycle):
                    assert (x, v.cycle[(i + 1) % len(v.cycle)]) in arcs[id(D)]
            w = check_circular_kd(D, c)
            if w is not None and w.kind == "cyclic-class":
                assert all(cols[x] == w.colour_class for x in w.cycle)
            if w is not None and w.kind == "short-arc":
                u, t = w.arc
                assert 0 < (cols[t] - cols[u]) % 4 < 2


def test_first_violation_is_lowest_window():
    rng = random.Random(14)
    for D in random_digraphs(25, 6):
        for cols in _colourings(D.n, 4, rng, 8):
            v = check_acyclic_kd(D, CircularColouring(4, 2, cols))
            if v is None:
                continue
            for i in range(v.window):
                sub = [x for x in range(D.n) if cols[x] in window(i, 4, 2)]
                from oracles import nx_acyclic

                assert nx_acyclic(D, sub)


def test_violation_str_human_readable():
    v = Violation("cyclic-window", window=1, cycle=(0, 2, 1))
    assert str(v) == (
        "cyclic-window: window 1 preimage contains the directed cycle 0->2->1->0"
    )


# ----------------------------------------------------------------------------
# colouring files


def test_colouring_roundtrip():
    c = CircularColouring(5, 2, [0, 3, 1, 4, 2])
    assert parse_colouring(serialize_colouring(c), 5, 5, 2) == c


def test_parse_colouring_accepts_comments_and_any_order():
    text = "c witness\n2 1\n0 0\n1 2\n"
    assert parse_colouring(text, 3, 3, 2).colours == (0, 2, 1)


@pytest.mark.parametrize(
    "text, message",
    [
        ("0 0 0\n", "malformed colouring record at line 1"),
        ("0 x\n", "malformed colouring record at line 1"),
        ("5 0\n", "vertex out of range at line 1"),
        ("0 9\n", "colour out of range at line 1"),
        ("0 0\n0 1\n1 0\n", "duplicate vertex at line 2"),
        ("0 0\n", "missing colour for vertex 1"),
    ],
)
def test_parse_colouring_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_colouring(text, 2, 3, 2)
