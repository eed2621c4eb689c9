"""Place a minor-closed class, given by forbidden minors, in its landscape bucket."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import NotAForest, NotATree
from .graph_core import (
    Graph,
    RootedTree,
    brute_force_minor,
    complete_bipartite,
    complete_graph,
)

INF = math.inf
Level = Union[int, float]  # a positive int, or math.inf


def rooted_level(t: RootedTree) -> int:
    """Least j such that ``t`` is a rooted minor of some hierarchical tree of level j."""
    if not isinstance(t, RootedTree):
        raise NotATree("expected a RootedTree")
    val = [0] * t.n
    for v in reversed(t.order):
        kids = sorted((val[c] for c in t.children(v)), reverse=True)
        if not kids:
            val[v] = 1
        elif len(kids) >= 2 and kids[0] == kids[1]:
            val[v] = kids[0] + 1
        else:
            second = kids[1] if len(kids) > 1 else 0
            val[v] = max(kids[0], second + 1)
    return val[t.root]


def tree_min_level(t: Graph) -> int:
    if not t.is_tree():
        raise NotATree("graph is not a tree")
    return min(rooted_level(RootedTree(t, r)) for r in range(t.n))


def forest_min_level(f: Graph) -> int:
    """Component-wise maximum of tree levels; the empty graph has level 1 by convention."""
    if not f.is_forest():
        raise NotAForest("graph has a cycle")
    level = 1
    for comp in f.components():
        sub, _ = f.induced(comp)
        level = max(level, tree_min_level(sub))
    return level


def _reduce(g: Graph) -> Graph:
    """Drop degree<=1 nodes and splice out degree-2 nodes; planarity is unchanged."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            nb = adj[v]
            if len(nb) <= 1:
                for w in nb:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif len(nb) == 2:
                a, b = nb
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    keep = sorted(adj)
    index = {v: i for i, v in enumerate(keep)}
    edges = {(min(index[v], index[w]), max(index[v], index[w])) for v in keep for w in adj[v]}
    return Graph(len(keep), sorted(edges))


_K5 = complete_graph(5)
_K33 = complete_bipartite(3, 3)
EXHAUSTIVE_PLANARITY_CAP = 12


def is_planar(g: Graph) -> bool:
    """Edge-count filter, then an exhaustive Kuratowski-minor search on the reduced graph.

    Reduced graphs above the exhaustive cap go to networkx's planarity test.
    """
    if g.n >= 3 and g.num_edges > 3 * g.n - 6:
        return False
    r = _reduce(g)
    if r.n < 5:
        return True
    if r.num_edges > 3 * r.n - 6:
        return False
    if r.n <= EXHAUSTIVE_PLANARITY_CAP:
        return not (brute_force_minor(_K5, r) or brute_force_minor(_K33, r))
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(r.n))
    nxg.add_edges_from((a, b) for a, b, _, _ in r.edges())
    return nx.check_planarity(nxg)[0]


@dataclass(frozen=True)
class ClassVerdict:
    bucket: str  # "A(i)", "B", "C" or "ALL"
    witness: str | None  # id of the forbidden graph realizing the verdict
    level: Level | None  # witness level; inf for B and C
    levels: tuple[tuple[str, Level], ...] = ()
    planar: tuple[str, ...] = ()  # ids of planar forbidden graphs (B/C evidence)
    warning: str | None = None

    @property
    def index(self) -> int | None:
        if self.bucket.startswith("A("):
            return int(self.bucket[2:-1])
        return None

    def line(self) -> str:
        if self.witness is None:
            return f"bucket={self.bucket} witness=-"
        lvl = "inf" if self.level == INF else str(self.level)
        return f"bucket={self.bucket} witness={self.witness}:{lvl}"


def _named(items: Iterable) -> list[tuple[str, Graph]]:
    out = []
    for j, item in enumerate(items, 1):
        if isinstance(item, Graph):
            out.append((f"H{j}", item))
        else:
            name, g = item
            out.append((str(name), g))
    return out


def classify(minors: Sequence) -> ClassVerdict:
    """Bucket for the class excluding every listed graph as a minor.

    ``minors`` holds Graphs or ``(id, Graph)`` pairs; bare graphs get ids H1, H2, ...
    """
    named = _named(minors)
    if not named:
        msg = "empty forbidden-minor list: the class of all graphs is outside the landscape"
        warnings.warn(msg, stacklevel=2)
        return ClassVerdict("ALL", None, None, warning=msg)
    levels: list[tuple[str, Level]] = []
    for name, h in named:
        levels.append((name, forest_min_level(h) if h.is_forest() else INF))
    finite = [(lvl, name) for name, lvl in levels if lvl != INF]
    if finite:
        lvl, name = min(finite)
        return ClassVerdict(f"A({lvl - 1})", name, lvl, tuple(levels))
    planar = tuple(sorted(name for name, h in named if is_planar(h)))
    if planar:
        return ClassVerdict("B", planar[0], INF, tuple(levels), planar)
    witness = min(name for name, _ in named)
    return ClassVerdict("C", witness, INF, tuple(levels), ())
