"""Path decompositions of the hierarchical trees, layer decompositions and growth profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidDecomposition, InvalidParameter, UnknownNode
from .graph_core import Graph, RootedTree, ball_order
from . import kernels


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def format(self) -> str:
        return "".join(" ".join(map(str, sorted(b))) + "\n" for b in self.bags)


def path_decomposition_of_T(k: int, s: int) -> PathDecomposition:
    """Constructive decomposition of ``generate_T(k, s)``, width ``k`` once ``s >= 3``.

    Node numbering matches ``generate_T``.
    """
    if not isinstance(k, int) or not isinstance(s, int) or k < 1 or s < 1:
        raise InvalidParameter(f"need k >= 1 and s >= 1, got k={k}, s={s}")

    def build(level: int, base: int) -> tuple[list[frozenset[int]], int]:
        spine = [base + j for j in range(s)]
        nxt = base + s
        if level == 1:
            if s == 1:
                return [frozenset(spine)], nxt
            return [frozenset((spine[j], spine[j + 1])) for j in range(s - 1)], nxt
        bags: list[frozenset[int]] = []
        for j in range(s):
            sub, nxt = build(level - 1, nxt)
            if j:
                bags.append(frozenset((spine[j - 1], spine[j])))
            bags.extend(b | {spine[j]} for b in sub)
        return bags, nxt

    bags, _ = build(k, 0)
    return PathDecomposition(tuple(bags))


def validate_path_decomposition(g: Graph, pd: PathDecomposition | Sequence) -> bool:
    bags = pd.bags if isinstance(pd, PathDecomposition) else [frozenset(b) for b in pd]
    for b in bags:
        for v in b:
            if v not in g:
                raise InvalidDecomposition(f"bag mentions node {v!r} outside the graph")
    seen: set[int] = set()
    for b in bags:
        seen |= b
    if len(seen) != g.n:
        return False
    first, last = {}, {}
    for i, b in enumerate(bags):
        for v in b:
            first.setdefault(v, i)
            last[v] = i
    for v in range(g.n):
        if any(v not in bags[i] for i in range(first[v], last[v] + 1)):
            return False
    for a, b, _, _ in g.edges():
        if last[a] < first[b] or last[b] < first[a]:
            return False
    return True


def exists_path_decomposition(g: Graph, w: int) -> bool:
    """Exhaustive check for a path decomposition of width at most ``w``.

    Searches vertex orderings by their prefix sets. Pathwidth equals the vertex
    separation number, so only prefixes whose frontier (prefix nodes with a
    neighbour outside) has at most ``w`` nodes are explored.
    """
    n = g.n
    if n == 0:
        return True
    nb = [0] * n
    for v in range(n):
        for u in g.adj[v]:
            nb[v] |= 1 << u
    full = (1 << n) - 1

    def frontier(mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if nb[v] & ~mask:
                out += 1
            m ^= low
        return out

    seen = {0}
    stack = [0]
    while stack:
        mask = stack.pop()
        if mask == full:
            return True
        rest = full & ~mask
        while rest:
            low = rest & -rest
            rest ^= low
            nm = mask | low
            if nm not in seen and frontier(nm) <= w:
                seen.add(nm)
                stack.append(nm)
    return False


def pathwidth(g: Graph) -> int:
    """Exact pathwidth by increasing exhaustive checks (small graphs only)."""
    w = 0
    while not exists_path_decomposition(g, w):
        w += 1
    return w


@dataclass(frozen=True)
class LayerDecomposition:
    C: int
    plain: tuple[frozenset[int], ...]  # index i holds L_i (index 0 unused, empty)
    starred: tuple[frozenset[int], ...]  # index i holds L_i*
    limit_level: int

    @property
    def layers(self) -> list[frozenset[int]]:
        """Interleaved sequence L_0*, L_1, L_1*, L_2, ..."""
        out = [self.starred[0]]
        for i in range(1, len(self.plain)):
            out.append(self.plain[i])
            if i < len(self.starred):
                out.append(self.starred[i])
        return out

    def level(self, i: int) -> frozenset[int]:
        return self.plain[i] if i < len(self.plain) else frozenset()


def layer_decomposition(t: RootedTree, C: int) -> LayerDecomposition:
    if C < 1:
        raise InvalidParameter("threshold must be at least 1")
    order, parent = t.order, t.parent
    starred = [frozenset(range(t.n))]
    plain = [frozenset()]
    while True:
        prev = starred[-1]
        count = [1 if v in prev else 0 for v in range(t.n)]
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                count[p] += count[v]
        cur = frozenset(v for v in range(t.n) if count[v] >= C)
        plain.append(cur)
        if not cur:
            break
        kids_in = [0] * t.n
        for v in cur:
            if parent[v] >= 0:
                kids_in[parent[v]] += 1
        starred.append(frozenset(v for v in range(t.n) if kids_in[v] >= 2))
    return LayerDecomposition(C, tuple(plain), tuple(starred), len(plain) - 2)


def is_k_C_limited(t: RootedTree, k: int, C: int) -> bool:
    if k < 0:
        raise InvalidParameter("k must be non-negative")
    return layer_decomposition(t, C).limit_level <= k


def K_bound(C: int, k: int, delta: int) -> int:
    if C < 1 or k < 0 or delta < 1:
        raise InvalidParameter("need C >= 1, k >= 0, delta >= 1")
    K = C - 1
    for _ in range(k):
        K = delta * C * (delta * K + 1)
    return K


@dataclass(frozen=True)
class GrowthReport:
    root: int
    counts: tuple[int, ...]
    fitted_exponent: int
    C: int
    max_degree: int
    bounds: tuple[int, ...]
    violations: tuple[int, ...]  # radii d >= 1 where the count exceeds the bound

    def csv(self) -> str:
        rows = ["d,count,bound"]
        rows += [f"{d},{c},{b}" for d, (c, b) in enumerate(zip(self.counts, self.bounds))]
        return "\n".join(rows) + "\n"


def bfs_tree(g: Graph, root: int) -> RootedTree:
    """BFS spanning tree of root's component, relabeled in BFS order; each node hangs off its first discoverer."""
    order, _ = ball_order(g, root, g.n)
    comp, _ = g.induced(order)
    parent = {root: None}
    edges = []
    for x in order:
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
    index = {v: i for i, v in enumerate(order)}
    for v, p in parent.items():
        if p is not None:
            edges.append((index[p], index[v]))
    return RootedTree(Graph(len(order), edges, comp.inputs), 0)


def growth_profile(g: Graph, root: int, d_max: int, C: int = 2) -> GrowthReport:
    """Ball sizes around ``root`` plus the layer-based exponent and its polynomial bound.

    The exponent is the limit level of the BFS tree from ``root`` at threshold ``C``;
    the bound column is ``K_bound(C, k, max_degree) * d**k``.
    """
    if root not in g:
        raise UnknownNode(f"node {root!r} not in graph")
    if d_max < 0:
        raise InvalidParameter("d_max must be non-negative")
    indptr, indices = kernels.csr(g)
    counts = tuple(kernels.bfs_counts(indptr, indices, root, d_max))
    k = layer_decomposition(bfs_tree(g, root), C).limit_level
    delta = max(g.max_degree, 1)
    K = K_bound(C, k, delta)
    bounds = tuple(K * d**k for d in range(d_max + 1))
    bad = tuple(d for d in range(1, d_max + 1) if counts[d] > bounds[d])
    return GrowthReport(root, counts, k, C, delta, bounds, bad)
