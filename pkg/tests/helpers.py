"""Shared generators for the test suite."""

from __future__ import annotations

import random

from lcl_landscape.graph_core import BACKWARD, FORWARD, NONE, Graph
from lcl_landscape.lcl_construct import build_instance
from lcl_landscape.lcl_construct.builder import DELTA
from lcl_landscape.lcl_construct.problem import input_alphabet

EDGE_TYPES = ("Spine", "Link", "Tree", "Path", "Link2", "Tree2", "Path2", "Vert", "Horiz", "Attach")


def random_labeled_graph(rng: random.Random, n: int, doubly: bool = False) -> Graph:
    """Uniformly noisy labeled graph with degree at most DELTA."""
    labels = sorted(input_alphabet(doubly)) + ["junk"]
    inputs = [rng.choice(labels) for _ in range(n)]
    deg = [0] * n
    edges, seen = [], set()
    for _ in range(rng.randint(0, 2 * n)):
        a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
        key = (min(a, b), max(a, b))
        if a == b or key in seen or deg[a] >= DELTA or deg[b] >= DELTA:
            continue
        seen.add(key)
        deg[a] += 1
        deg[b] += 1
        t = rng.choice(EDGE_TYPES)
        o = NONE if t == "Attach" else rng.choice((FORWARD, BACKWARD))
        edges.append((key[0], key[1], t, o))
    return Graph(n, edges, inputs, DELTA)


def perturbed_instance(rng: random.Random, doubly: bool = False) -> Graph:
    """A small valid instance with a few random edge deletions and label flips."""
    inst = build_instance(3, rng.randint(1, 6), doubly)
    g = inst.graph
    edges = g.edges()
    for _ in range(rng.randint(0, 3)):
        if edges:
            edges.pop(rng.randrange(len(edges)))
    inputs = list(g.inputs)
    labels = sorted(input_alphabet(doubly))
    for _ in range(rng.randint(0, 2)):
        inputs[rng.randrange(g.n)] = rng.choice(labels)
    return Graph(g.n, edges, inputs, DELTA)


def fuzz_corpus(seed: int = 0, count: int = 100) -> list[tuple[Graph, bool]]:
    """(graph, doubly) pairs, all with at most 60 nodes."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        doubly = bool(i % 2)
        if i % 4 < 2:
            g = random_labeled_graph(rng, rng.randint(1, 60), doubly)
        else:
            g = perturbed_instance(rng, doubly)
        assert g.n <= 60
        out.append((g, doubly))
    return out
