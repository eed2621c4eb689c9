import random
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from lcl_landscape.classifier import (
    INF,
    classify,
    forest_min_level,
    is_planar,
    rooted_level,
    tree_min_level,
)
from lcl_landscape.errors import NotAForest, NotATree
from lcl_landscape.graph_core import (
    Graph,
    RootedTree,
    brute_force_minor,
    brute_force_rooted_minor,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    generate_T,
    iter_trees,
    path_graph,
    star,
    tree_minor,
    tree_rooted_minor,
)


def spider(legs, length):
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph(nxt, edges)


def oracle_rooted_level(t: RootedTree) -> int:
    j = 1
    while not tree_rooted_minor(t, generate_T(j, max(t.n, 1))):
        j += 1
    return j


def oracle_tree_level(t: Graph) -> int:
    j = 1
    while not tree_minor(t, generate_T(j, t.n).tree):
        j += 1
    return j


# -- levels ------------------------------------------------------------------------

def test_rooted_level_examples():
    assert rooted_level(RootedTree(Graph(1), 0)) == 1
    assert rooted_level(RootedTree(star(3), 0)) == 2
    for k in (1, 2, 3):
        assert rooted_level(generate_T(k, 3)) == k


def test_claw_level_by_exhaustive_search():
    claw = RootedTree(star(3), 0)
    assert brute_force_rooted_minor(claw, generate_T(2, 3))
    for s in range(1, 6):
        assert not brute_force_rooted_minor(claw, generate_T(1, s))


def test_hierarchy_levels_by_exhaustive_search():
    assert brute_force_rooted_minor(generate_T(2, 3), generate_T(2, 3))
    for s in range(1, 13):
        assert not brute_force_rooted_minor(generate_T(2, 2), generate_T(1, s))


def test_rooted_level_rejects_graph():
    with pytest.raises(NotATree):
        rooted_level(path_graph(3))


def test_rooted_level_matches_oracle_small():
    for n in range(1, 9):
        for t in iter_trees(n):
            for r in range(n):
                rt = RootedTree(t, r)
                assert rooted_level(rt) == oracle_rooted_level(rt)


def test_tree_min_level_examples():
    assert tree_min_level(path_graph(4)) == 1
    assert tree_min_level(spider(3, 2)) == 2
    assert tree_min_level(generate_T(3, 3).tree) == 3


def test_spider_by_exhaustive_search():
    sp = spider(3, 2)
    assert tree_minor(sp, generate_T(2, 4).tree)
    for s in range(1, 13):
        assert not brute_force_minor(sp, path_graph(s))


def test_tree_min_level_rejects_cycle():
    with pytest.raises(NotATree):
        tree_min_level(cycle_graph(3))


def test_tree_min_level_matches_oracle():
    for n in range(1, 9):
        for t in iter_trees(n):
            assert tree_min_level(t) == oracle_tree_level(t)


def test_forest_examples():
    two_edges = Graph(4, [(0, 1), (2, 3)])
    assert forest_min_level(two_edges) == 1
    assert brute_force_minor(two_edges, path_graph(5))
    mixed = disjoint_union(star(3), path_graph(3))
    assert forest_min_level(mixed) == 2
    assert tree_minor(star(3), generate_T(2, 5).tree)
    assert forest_min_level(Graph(0)) == 1
    with pytest.raises(NotAForest):
        forest_min_level(cycle_graph(4))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_rooted_level_monotone_under_rooted_minor(seed):
    rng = random.Random(seed)

    def rand_rooted(n):
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        return RootedTree(Graph(n, edges), rng.randrange(n))

    h, t = rand_rooted(rng.randint(1, 6)), rand_rooted(rng.randint(1, 10))
    if brute_force_rooted_minor(h, t):
        assert rooted_level(h) <= rooted_level(t)


# -- planarity ---------------------------------------------------------------------

def test_planarity_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))


def test_planarity_petersen():
    nxg = nx.petersen_graph()
    g = Graph(10, list(nxg.edges()))
    assert not is_planar(g)


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from((a, b) for a, b, _, _ in g.edges())
    return h


def test_planarity_agrees_with_networkx():
    rng = random.Random(17)
    for _ in range(250):
        n = rng.randint(1, 10)
        m = rng.randint(0, min(3 * n, n * (n - 1) // 2))
        edges = set()
        while len(edges) < m:
            a, b = rng.sample(range(n), 2)
            edges.add((min(a, b), max(a, b)))
        g = Graph(n, sorted(edges))
        assert is_planar(g) == nx.check_planarity(_to_nx(g))[0]


def test_planarity_large_subdivision():
    # a subdivided K_{3,3} shrinks back to six branch nodes before the search
    edges, nxt = [], 6
    for a in range(3):
        for b in range(3, 6):
            edges += [(a, nxt), (nxt, nxt + 1), (nxt + 1, b)]
            nxt += 2
    assert not is_planar(Graph(nxt, edges))


# -- classify ----------------------------------------------------------------------

def test_classify_golden():
    v = classify([path_graph(4)])
    assert v.bucket == "A(0)" and v.level == 1 and v.line() == "bucket=A(0) witness=H1:1"
    assert classify([star(3)]).bucket == "A(1)"
    for k in range(4):
        assert classify([generate_T(k + 1, 3).tree]).bucket == f"A({k})"
    b = classify([complete_graph(4)])
    assert b.bucket == "B" and b.level == INF
    assert classify([complete_graph(5), complete_bipartite(3, 3)]).bucket == "C"


def test_classify_witness_levels():
    v = classify([("k4", complete_graph(4)), ("claw", star(3)), ("p5", path_graph(5))])
    assert v.bucket == "A(0)" and v.witness == "p5"
    assert dict(v.levels)["k4"] == INF
    assert v.index == 0


def test_classify_forest_list():
    assert classify([Graph(4, [(0, 1), (2, 3)])]).bucket == "A(0)"


def test_classify_empty_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        v = classify([])
    assert v.bucket == "ALL" and caught
    assert v.line() == "bucket=ALL witness=-"


POOL = [
    path_graph(3), path_graph(6), star(3), spider(3, 2), generate_T(2, 3).tree,
    complete_graph(4), complete_graph(5), complete_bipartite(3, 3), cycle_graph(5),
]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, len(POOL) - 1), min_size=1, max_size=5), st.randoms())
def test_classify_order_and_duplicates(picks, rnd):
    graphs = [POOL[i] for i in picks]
    base = classify(graphs).bucket
    shuffled = graphs[:]
    rnd.shuffle(shuffled)
    assert classify(shuffled).bucket == base
    assert classify(graphs + graphs[:1]).bucket == base


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, len(POOL) - 1), max_size=4))
def test_classify_exactly_one_bucket(picks):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        v = classify([POOL[i] for i in picks])
    kinds = [v.bucket.startswith("A("), v.bucket == "B", v.bucket == "C", v.bucket == "ALL"]
    assert sum(kinds) == 1
    if v.index is not None:
        assert v.level == v.index + 1
