"""Finite labeled graphs, rooted trees, radius-d balls and minor oracles.

Nodes are the integers ``0..n-1``.  Every edge carries a type token and an
orientation token.  The orientation is stored relative to the canonical
endpoint order ``(min, max)``: ``forward`` means the arc points from the
smaller index to the larger one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    InvalidComparison,
    InvalidParameter,
    NotATree,
    OracleTooLarge,
    ParseError,
    UnknownNode,
)

DEFAULT = "-"
FORWARD, BACKWARD, NONE = "forward", "backward", "none"
ORIENTATIONS = (FORWARD, BACKWARD, NONE)
WITH_IDS, ID_FREE = "with-ids", "id-free"
ORACLE_CAP = 12


def _flip(orient: str) -> str:
    if orient == FORWARD:
        return BACKWARD
    if orient == BACKWARD:
        return FORWARD
    return orient


def _check_token(tok: str, what: str) -> str:
    if not isinstance(tok, str) or not tok or any(c.isspace() for c in tok):
        raise InvalidParameter(f"{what} must be a non-empty token without whitespace: {tok!r}")
    return tok


class Graph:
    """Immutable simple graph with node inputs and typed, oriented edges.

    ``edges`` items are ``(u, v)``, ``(u, v, type)`` or ``(u, v, type, orientation)``
    where the orientation is read relative to the order ``u, v`` as written.
    """

    __slots__ = ("n", "adj", "inputs", "max_degree", "_attr", "_hash", "_arcs")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence] = (),
        inputs: Sequence[str] | None = None,
        max_degree: int | None = None,
    ):
        if n < 0:
            raise InvalidParameter("node count must be non-negative")
        attr: dict[tuple[int, int], tuple[str, str]] = {}
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            etype = e[2] if len(e) > 2 else DEFAULT
            orient = e[3] if len(e) > 3 else NONE
            if orient == DEFAULT:
                orient = NONE
            if orient not in ORIENTATIONS:
                raise InvalidParameter(f"bad orientation {orient!r}")
            _check_token(etype, "edge type")
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownNode(f"edge ({u},{v}) references a node outside 0..{n - 1}")
            if u == v:
                raise InvalidParameter(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in attr:
                raise InvalidParameter(f"duplicate edge {key}")
            attr[key] = (etype, orient if u < v else _flip(orient))
            nbrs[u].add(v)
            nbrs[v].add(u)
        if inputs is None:
            inputs = (DEFAULT,) * n
        inputs = tuple(inputs)
        if len(inputs) != n:
            raise InvalidParameter("inputs length differs from node count")
        for tok in inputs:
            _check_token(tok, "input label")
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        real = max((len(a) for a in adj), default=0)
        if max_degree is None:
            max_degree = real
        elif max_degree < real:
            raise InvalidParameter(f"degree {real} exceeds declared maximum {max_degree}")
        self._init(n, adj, inputs, max_degree, attr)

    def _init(self, n, adj, inputs, max_degree, attr):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "_attr", attr)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_arcs", None)

    @classmethod
    def _trusted(cls, n, adj, inputs, max_degree, attr) -> "Graph":
        g = cls.__new__(cls)
        g._init(n, adj, inputs, max_degree, attr)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------
    @property
    def nodes(self) -> range:
        return range(self.n)

    def __len__(self) -> int:
        return self.n

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def num_edges(self) -> int:
        return len(self._attr)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._attr

    def edge(self, u: int, v: int) -> tuple[str, str]:
        """(type, orientation) with the orientation read relative to ``u, v``."""
        if u < v:
            return self._attr[(u, v)]
        etype, orient = self._attr[(v, u)]
        return etype, _flip(orient)

    def edge_type(self, u: int, v: int) -> str:
        return self._attr[(u, v) if u < v else (v, u)][0]

    def points(self, u: int, v: int) -> bool:
        """True when the edge {u,v} exists and is directed u -> v."""
        key = (u, v) if u < v else (v, u)
        a = self._attr.get(key)
        if a is None:
            return False
        return a[1] == (FORWARD if u < v else BACKWARD)

    def edges(self) -> list[tuple[int, int, str, str]]:
        return [(a, b, t, o) for (a, b), (t, o) in sorted(self._attr.items())]

    def _arc_tables(self):
        if self._arcs is None:
            out = [[] for _ in range(self.n)]
            inc = [[] for _ in range(self.n)]
            for (a, b), (t, o) in self._attr.items():
                if o == FORWARD:
                    out[a].append((b, t))
                    inc[b].append((a, t))
                elif o == BACKWARD:
                    out[b].append((a, t))
                    inc[a].append((b, t))
            for lst in out:
                lst.sort()
            for lst in inc:
                lst.sort()
            object.__setattr__(self, "_arcs", (out, inc))
        return self._arcs

    def out_arcs(self, v: int) -> list[tuple[int, str]]:
        """Heads w (with edge type) of arcs v -> w."""
        return self._arc_tables()[0][v]

    def in_arcs(self, v: int) -> list[tuple[int, str]]:
        """Tails w (with edge type) of arcs w -> v."""
        return self._arc_tables()[1][v]

    # -- structure -----------------------------------------------------
    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.num_edges == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def induced(self, keep: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` (relabeled in the given order) and the origin map."""
        index = {v: i for i, v in enumerate(keep)}
        edges = []
        for v in keep:
            for w in self.adj[v]:
                if w in index and v < w:
                    t, o = self._attr[(v, w)]
                    edges.append((index[v], index[w], t, o))
        g = Graph(len(keep), edges, [self.inputs[v] for v in keep], self.max_degree)
        return g, list(keep)

    def relabel_inputs(self, inputs: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges(), inputs, self.max_degree)

    # -- equality ------------------------------------------------------
    def _key(self):
        return (self.n, self.max_degree, self.inputs, tuple(sorted(self._attr.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._key()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, max_degree={self.max_degree})"


def arc(u: int, v: int, etype: str) -> tuple[int, int, str, str]:
    """Edge tuple for an arc u -> v."""
    return (u, v, etype, FORWARD)


# -- small graph families ------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, inputs, off = [], [], 0
    for g in graphs:
        edges += [(a + off, b + off, t, o) for a, b, t, o in g.edges()]
        inputs += list(g.inputs)
        off += g.n
    return Graph(off, edges, inputs)


def complete_binary_tree(depth: int) -> "RootedTree":
    """Complete binary tree with ``depth`` levels below the root (2^(depth+1)-1 nodes)."""
    n = 2 ** (depth + 1) - 1
    return RootedTree(Graph(n, [(i, (i - 1) // 2) for i in range(1, n)]), 0)


# -- rooted trees --------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int
    parent: tuple[int, ...] = field(init=False, repr=False, compare=False)
    order: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.tree
        if self.root not in g:
            raise UnknownNode(f"root {self.root} not in tree")
        if not g.is_tree():
            raise NotATree("graph is not a tree")
        parent = [-1] * g.n
        order = [self.root]
        seen = {self.root}
        for x in order:
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    order.append(y)
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "order", tuple(order))

    @property
    def n(self) -> int:
        return self.tree.n

    def children(self, v: int) -> list[int]:
        p = self.parent[v]
        return [w for w in self.tree.adj[v] if w != p]

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        for v in reversed(self.order):
            if self.parent[v] >= 0:
                size[self.parent[v]] += size[v]
        return size


def generate_T(k: int, s: int) -> RootedTree:
    """The hierarchical tree on levels ``k`` and spine length ``s``.

    Nodes ``0..s-1`` form the spine (root ``0``); the subtree hung below spine
    node ``j`` occupies a contiguous index block after the spine.
    """
    if not isinstance(k, int) or not isinstance(s, int) or k < 1 or s < 1:
        raise InvalidParameter(f"need k >= 1 and s >= 1, got k={k}, s={s}")
    edges: list[tuple[int, int]] = []

    def build(level: int, base: int) -> int:
        for j in range(s - 1):
            edges.append((base + j, base + j + 1))
        nxt = base + s
        if level > 1:
            for j in range(s):
                sub = nxt
                nxt = build(level - 1, sub)
                edges.append((base + j, sub))
        return nxt

    n = build(k, 0)
    return RootedTree(Graph(n, edges), 0)


def T_size(k: int, s: int) -> int:
    return s if k == 1 else s + s * T_size(k - 1, s)


# -- balls ---------------------------------------------------------------

@dataclass(frozen=True)
class Ball:
    """Induced radius-d view around a center.

    The view is relabeled so the center is node 0 and nodes appear in BFS
    order; the numbering carries no meaning beyond that.
    """

    center: int
    radius: int
    view: Graph
    id_mode: str
    ids: tuple[int, ...] | None = None
    dist: tuple[int, ...] = ()
    outputs: tuple[str, ...] | None = None


def bfs_distances(g: Graph, src: int, limit: int | None = None) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if limit is not None and d >= limit:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def extract_ball(
    g: Graph,
    order: Sequence[int],
    dist: Sequence[int],
    center_key: int,
    radius: int,
    id_mode: str,
    ids: Sequence[int] | None = None,
    outputs: Sequence[str] | None = None,
) -> Ball:
    """Assemble a Ball from a precomputed BFS order (host nodes) and distances."""
    index = {v: i for i, v in enumerate(order)}
    attr = g._attr
    adj_out: list[tuple[int, ...]] = []
    new_attr: dict[tuple[int, int], tuple[str, str]] = {}
    for i, v in enumerate(order):
        row = []
        for w in g.adj[v]:
            j = index.get(w)
            if j is None:
                continue
            row.append(j)
            if i < j:
                t, o = attr[(v, w) if v < w else (w, v)]
                if o != NONE and (v < w) != (i < j):
                    o = _flip(o)
                new_attr[(i, j)] = (t, o)
        row.sort()
        adj_out.append(tuple(row))
    view = Graph._trusted(
        len(order), tuple(adj_out), tuple(g.inputs[v] for v in order), g.max_degree, new_attr
    )
    id_tuple = None
    if id_mode == WITH_IDS:
        id_tuple = tuple(ids[v] for v in order) if ids is not None else tuple(order)
    out_tuple = tuple(outputs[v] for v in order) if outputs is not None else None
    return Ball(center_key, radius, view, id_mode, id_tuple, tuple(dist), out_tuple)


def ball_order(g: Graph, v: int, d: int) -> tuple[list[int], list[int]]:
    dist = {v: 0}
    order = [v]
    for x in order:
        dx = dist[x]
        if dx >= d:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dx + 1
                order.append(y)
    return order, [dist[x] for x in order]


def ball(
    g: Graph,
    v: int,
    d: int,
    id_mode: str = ID_FREE,
    ids: Sequence[int] | None = None,
    outputs: Sequence[str] | None = None,
) -> Ball:
    """Radius-``d`` view around ``v``; ``ids`` defaults to node indices in with-ids mode."""
    if v not in g:
        raise UnknownNode(f"node {v!r} not in graph")
    if d < 0:
        raise InvalidParameter("radius must be non-negative")
    if id_mode not in (WITH_IDS, ID_FREE):
        raise InvalidParameter(f"unknown id mode {id_mode!r}")
    order, dist = ball_order(g, v, d)
    return extract_ball(g, order, dist, v, d, id_mode, ids, outputs)


def _node_sig(b: Ball, x: int):
    sig = (b.dist[x], b.view.inputs[x], b.view.degree(x))
    if b.ids is not None:
        sig += (b.ids[x],)
    if b.outputs is not None:
        sig += (b.outputs[x],)
    return sig


def _tree_canon(b: Ball) -> str:
    g = b.view
    parent = {0: -1}
    order = [0]
    for x in order:
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    canon: dict[int, str] = {}
    for x in reversed(order):
        kids = []
        for y in g.adj[x]:
            if y == parent[x]:
                continue
            t, o = g.edge(x, y)
            kids.append(f"{t}|{o}|{canon[y]}")
        kids.sort()
        canon[x] = "(" + repr(_node_sig(b, x)) + "".join("[" + k + "]" for k in kids) + ")"
    return canon[0]


def _to_digraph(b: Ball):
    import networkx as nx

    g = b.view
    dg = nx.DiGraph()
    for x in range(g.n):
        dg.add_node(x, sig=_node_sig(b, x))
    for u, v, t, o in g.edges():
        if o == FORWARD:
            dg.add_edge(u, v, lab=(t, "d"))
        elif o == BACKWARD:
            dg.add_edge(v, u, lab=(t, "d"))
        else:
            dg.add_edge(u, v, lab=(t, "u"))
            dg.add_edge(v, u, lab=(t, "u"))
    return dg


def ball_isomorphic(a: Ball, b: Ball) -> bool:
    """Center-preserving isomorphism test respecting inputs, edge types and orientations."""
    if a.id_mode != b.id_mode:
        raise InvalidComparison(f"cannot compare {a.id_mode} ball with {b.id_mode} ball")
    ga, gb = a.view, b.view
    if ga.n != gb.n or ga.num_edges != gb.num_edges:
        return False
    if (a.outputs is None) != (b.outputs is None):
        return False
    if sorted(_node_sig(a, x) for x in range(ga.n)) != sorted(_node_sig(b, x) for x in range(gb.n)):
        return False
    if ga.num_edges == ga.n - 1:  # connected views, so both are trees
        return _tree_canon(a) == _tree_canon(b)
    from networkx.algorithms.isomorphism import DiGraphMatcher

    da, db = _to_digraph(a), _to_digraph(b)
    matcher = DiGraphMatcher(
        da,
        db,
        node_match=lambda p, q: p["sig"] == q["sig"],
        edge_match=lambda p, q: p["lab"] == q["lab"],
    )
    # distance 0 is unique to the center, so every match fixes the center
    return matcher.is_isomorphic()


# -- minor oracles -------------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _connected_masks(g: Graph) -> list[int]:
    n = g.n
    nb = [0] * n
    for v in range(n):
        for w in g.adj[v]:
            nb[v] |= 1 << w
    found = set()
    # grow connected sets from their lowest vertex
    for s in range(n):
        stack = [(1 << s, 0)]
        allowed_hi = ~((1 << s) - 1)
        while stack:
            mask, _ = stack.pop()
            if mask in found:
                continue
            found.add(mask)
            frontier = 0
            m = mask
            while m:
                low = m & -m
                frontier |= nb[low.bit_length() - 1]
                m ^= low
            frontier &= ~mask & allowed_hi
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                stack.append((mask | low, 0))
    return sorted(found, key=lambda m: (_popcount(m), m))


def _minor_search(h: Graph, g: Graph, root_pair: tuple[int, int] | None) -> bool:
    if g.n > ORACLE_CAP:
        raise OracleTooLarge(f"host has {g.n} nodes; exhaustive oracle is capped at {ORACLE_CAP}")
    if h.n == 0:
        return True
    if h.n > g.n or h.num_edges > g.num_edges:
        return False
    nb = [0] * g.n
    for v in range(g.n):
        for w in g.adj[v]:
            nb[v] |= 1 << w
    masks = _connected_masks(g)
    border = {}
    for m in masks:
        b, x = 0, m
        while x:
            low = x & -x
            b |= nb[low.bit_length() - 1]
            x ^= low
        border[m] = b & ~m
    # order pattern nodes: the rooted one first, then BFS so each has an earlier neighbour
    first = root_pair[0] if root_pair else None
    order: list[int] = []
    seen: set[int] = set()
    starts = ([first] if first is not None else []) + sorted(range(h.n), key=lambda v: -h.degree(v))
    for s in starts:
        if s in seen:
            continue
        seen.add(s)
        q = [s]
        for x in q:
            order.append(x)
            for y in sorted(h.adj[x], key=lambda v: -h.degree(v)):
                if y not in seen:
                    seen.add(y)
                    q.append(y)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in h.adj[v] if pos[w] < pos[v]] for v in order]
    later_open = [
        [w for w in order[: i + 1] if any(pos[z] > i for z in h.adj[w])] for i in range(h.n)
    ]
    root_bit = (1 << root_pair[1]) if root_pair else 0
    full = (1 << g.n) - 1
    cluster = [0] * h.n
    failed: set = set()

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        remaining = h.n - i
        if _popcount(full & ~used) < remaining:
            return False
        key = (i, used, tuple(cluster[w] for w in later_open[i - 1])) if i else None
        if key is not None and key in failed:
            return False
        v = order[i]
        need = [cluster[w] for w in earlier[i]]
        for m in masks:
            if m & used:
                continue
            if i == 0 and root_bit and not (m & root_bit):
                continue
            if _popcount(m) > _popcount(full & ~used) - (remaining - 1):
                break
            bm = border[m]
            if all(bm & c for c in need):
                cluster[v] = m
                if rec(i + 1, used | m):
                    return True
        cluster[v] = 0
        if key is not None:
            failed.add(key)
        return False

    return rec(0, 0)


def brute_force_minor(h: Graph, g: Graph) -> bool:
    """Exhaustive branch-set search: is ``h`` a minor of ``g``? Host capped at 12 nodes."""
    return _minor_search(h, g, None)


def brute_force_rooted_minor(h: RootedTree, g: RootedTree) -> bool:
    """Exhaustive search with the pattern root's cluster forced to hold the host root."""
    return _minor_search(h.tree, g.tree, (h.root, g.root))


def _embed_table(h: RootedTree, g: RootedTree) -> list[list[bool]]:
    """ok[c][x]: the subtree of h at c embeds in the subtree of g at x with x in c's branch set."""
    ok = [[False] * g.n for _ in range(h.n)]
    g_kids = [g.children(x) for x in range(g.n)]
    for c in reversed(h.order):
        kids = h.children(c)
        k = len(kids)
        full = (1 << k) - 1
        if k == 0:
            ok[c] = [True] * g.n
            continue
        # reach[x]: set of subsets of kids placeable below x while x stays in c's branch set
        reach: list[set[int]] = [set() for _ in range(g.n)]
        for x in reversed(g.order):
            cur = {0}
            for y in g_kids[x]:
                opts = set(reach[y])
                for i, ch in enumerate(kids):
                    if ok[ch][y]:
                        opts.add(1 << i)
                nxt = set()
                for a in cur:
                    for b in opts:
                        if a & b == 0:
                            nxt.add(a | b)
                cur = nxt
            reach[x] = cur
            ok[c][x] = full in cur
    return ok


def tree_rooted_minor(h: RootedTree, g: RootedTree) -> bool:
    """Rooted minor test for trees by dynamic programming (no size cap)."""
    return _embed_table(h, g)[h.root][g.root]


def tree_minor(h: Graph, g: Graph) -> bool:
    """Minor test for a tree pattern in a tree host by dynamic programming over roots."""
    if h.n == 0:
        return True
    if not h.is_tree() or not g.is_tree():
        raise NotATree("tree_minor needs two trees")
    if h.n > g.n:
        return False
    groot = RootedTree(g, 0)
    for hr in range(h.n):
        table = _embed_table(RootedTree(h, hr), groot)
        if any(table[hr]):
            return True
    return False


# -- text format ---------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n} {g.max_degree}"]
    lines += [f"node {v} {g.inputs[v]}" for v in range(g.n)]
    for a, b, t, o in g.edges():
        lines.append(f"edge {a} {b} {t} {DEFAULT if o == NONE else o}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    inputs: dict[int, str] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "graph":
                if header is not None or len(parts) != 3:
                    raise ParseError("malformed or repeated header", lineno)
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "node":
                if len(parts) != 3:
                    raise ParseError("expected: node <id> <input-label>", lineno)
                v = int(parts[1])
                if v in inputs:
                    raise ParseError(f"node {v} declared twice", lineno)
                inputs[v] = parts[2]
            elif parts[0] == "edge":
                if len(parts) != 5:
                    raise ParseError("expected: edge <u> <v> <type> <orientation>", lineno)
                edges.append((int(parts[1]), int(parts[2]), parts[3], parts[4]))
            else:
                raise ParseError(f"unknown record {parts[0]!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno) from exc
    if header is None:
        raise ParseError("missing 'graph <n> <max-degree>' header")
    n, delta = header
    if set(inputs) - set(range(n)):
        raise ParseError(f"node ids must lie in 0..{n - 1}")
    labels = [inputs.get(v, DEFAULT) for v in range(n)]
    try:
        return Graph(n, edges, labels, delta)
    except (InvalidParameter, UnknownNode) as exc:
        raise ParseError(str(exc)) from exc


def iter_trees(n: int) -> Iterator[Graph]:
    """All unlabeled trees on ``n`` nodes, one representative each (via networkx)."""
    import networkx as nx

    if n == 1:
        yield Graph(1)
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph(n, list(t.edges()))
