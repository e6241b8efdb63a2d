import random
from fractions import Fraction

import pytest

from arbor import (
    ResourceLimitError,
    brute_count_cssg,
    brute_count_forests,
    build_graph,
    contract_edge,
    count_connected_spanning_subgraphs,
    count_spanning_forests,
    cycle_graph,
    cycle_with_loops,
    delete_edge,
    product_bound,
    tutte,
)
from arbor.tutte import _padd


def _random_connected(rng, n, extra):
    # random spanning tree plus extra edges (parallels and loops allowed)
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randrange(n)))
    return build_graph(n, edges)


def test_tutte_c4():
    T = tutte(cycle_graph(4))
    assert T.coeffs == {(0, 1): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}
    assert (T.max_x, T.max_y) == (3, 1)


def test_tutte_single_loop():
    T = tutte(build_graph(1, [(0, 0)]))
    assert T.coeffs == {(0, 1): 1}


def test_tutte_loop_decorated_cycle():
    # T(C_{3,2l}) = y^6 (y + x + x^2)
    T = tutte(cycle_with_loops(3, 2))
    assert T.coeffs == {(0, 7): 1, (1, 6): 1, (2, 6): 1}


def test_evaluate_examples():
    T3 = tutte(cycle_graph(3))
    assert T3.evaluate(1, 1) == 3
    assert T3.evaluate(2, 2) == 8
    assert tutte(cycle_graph(5)).evaluate(2, 1) == 31
    assert T3.evaluate(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 3) + Fraction(1, 2) + Fraction(1, 4)


def test_count_spanning_forests_examples():
    assert count_spanning_forests(build_graph(2, [(0, 1)])) == 2
    assert count_spanning_forests(cycle_graph(8)) == 255


def test_count_cssg_examples():
    assert count_connected_spanning_subgraphs(build_graph(2, [(0, 1)])) == 1
    for n in range(3, 11):
        assert count_connected_spanning_subgraphs(cycle_graph(n)) == n + 1
    assert count_connected_spanning_subgraphs(cycle_graph(4)) == 5


def test_cssg_disconnected_returns_zero():
    G = build_graph(4, [(0, 1), (2, 3)])
    with pytest.warns(UserWarning):
        assert count_connected_spanning_subgraphs(G) == 0


def test_brute_examples():
    C3 = cycle_graph(3)
    assert brute_count_forests(C3) == 7
    assert brute_count_cssg(C3) == 4
    empty = build_graph(4, [])
    assert brute_count_forests(empty) == 1
    assert brute_count_cssg(empty) == 0
    chord = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert brute_count_forests(chord) == 24 == count_spanning_forests(chord)


def test_brute_cap():
    from arbor.multigraph import GraphError

    G = build_graph(2, [(0, 1)] * 8)
    with pytest.raises(GraphError):
        brute_count_forests(G, cap=5)


def test_oracle_equivalence_random():
    rng = random.Random(20240817)
    for _ in range(25):
        G = _random_connected(rng, rng.randint(2, 6), rng.randint(0, 6))
        assert brute_count_forests(G) == count_spanning_forests(G)
        assert brute_count_cssg(G) == count_connected_spanning_subgraphs(G)


def test_deletion_contraction_identity():
    from arbor.tutte import _bridges

    rng = random.Random(5)
    checked = 0
    while checked < 15:
        G = _random_connected(rng, rng.randint(3, 6), rng.randint(1, 5))
        bridges = set(_bridges(G))
        ordinary = [
            i for i, (u, v) in enumerate(G.edges) if u != v and i not in bridges
        ]
        if not ordinary:
            continue
        checked += 1
        eid = rng.choice(ordinary)
        lhs = tutte(G).coeffs
        rhs = _padd(tutte(delete_edge(G, eid)).coeffs, tutte(contract_edge(G, eid)).coeffs)
        assert lhs == {k: v for k, v in rhs.items() if v}


def test_relabeling_invariance():
    rng = random.Random(3)
    for _ in range(10):
        G = _random_connected(rng, 6, 4)
        perm = list(range(6))
        rng.shuffle(perm)
        H = build_graph(6, [(perm[u], perm[v]) for u, v in G.edges])
        assert tutte(G).coeffs == tutte(H).coeffs


def test_tutte_invariants_random():
    rng = random.Random(99)
    for _ in range(15):
        G = _random_connected(rng, rng.randint(2, 6), rng.randint(0, 5))
        T = tutte(G)
        assert all(c > 0 for c in T.coeffs.values())
        assert T.evaluate(2, 2) == 2 ** G.e
        nsf = T.evaluate(2, 1)
        assert 1 <= nsf <= 2 ** G.e
        assert nsf <= product_bound(G)


def test_loop_invariance_of_forest_count():
    for n in range(3, 7):
        base = count_spanning_forests(cycle_graph(n))
        assert base == 2 ** n - 1
        for m in range(1, 4):
            assert count_spanning_forests(cycle_with_loops(n, m)) == base


def test_node_budget_limit():
    G = build_graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    with pytest.raises(ResourceLimitError):
        tutte(G, budget=3)


def test_json_shape():
    d = tutte(cycle_graph(3)).to_json_dict()
    assert d["max_x"] == 2 and d["max_y"] == 1
    assert [0, 1, "1"] in d["coeffs"]
    assert all(isinstance(c, str) for _, _, c in d["coeffs"])
