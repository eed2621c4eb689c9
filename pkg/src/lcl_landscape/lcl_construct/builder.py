"""Instances of the path / exponentiation-tree / grid structure, and targeted corruptions."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidMutation, InvalidParameter
from ..graph_core import Graph, arc, NONE

DELTA = 6
KINDS = ("Top", "Middle", "Bottom")
MUTATIONS = ("drop-tree-edge", "recolor-layer-node", "break-face", "shorten-spine")


def color_of(j: int) -> int:
    """Colour of the j-th node (1-based) on a layer path."""
    return 1 if j % 2 else 2


def e_label(tier: int, kind: str, color: int) -> str:
    return f"E{tier}:{kind}:{color}"


@dataclass(frozen=True)
class ConstructionInstance:
    graph: Graph
    s: int
    height: int
    doubly: bool
    vp: tuple[int, ...]  # v_1 .. v_s
    ve: tuple[tuple[int, ...], ...]  # ve[i-1][j-1] is u_{i,j}
    ve2: tuple[tuple[int, ...], ...] | None  # second-tier layers when doubly
    grid: tuple[tuple[int, ...], ...]  # grid[r-1][c-1]; row 1 touches the path

    @property
    def n(self) -> int:
        return self.graph.n

    def cell(self, row: int, col: int) -> int:
        return self.grid[row - 1][col - 1]

    @property
    def ve_size(self) -> int:
        total = sum(len(layer) for layer in self.ve)
        if self.ve2:
            total += sum(len(layer) for layer in self.ve2)
        return total


def _tree_layers(count: int, start: int) -> tuple[list[list[int]], int]:
    layers, nxt = [], start
    for i in range(count):
        width = 2**i
        layers.append(list(range(nxt, nxt + width)))
        nxt += width
    return layers, nxt


def _tree_edges(layers, tree_t: str, path_t: str):
    edges = []
    for i, layer in enumerate(layers):
        for j in range(len(layer) - 1):
            edges.append(arc(layer[j + 1], layer[j], path_t))
        if i + 1 < len(layers):
            below = layers[i + 1]
            for j, parent in enumerate(layer):
                edges.append(arc(below[2 * j], parent, tree_t))
                edges.append(arc(below[2 * j + 1], parent, tree_t))
    return edges


def _tree_inputs(layers, tier: int, inputs: list[str]) -> None:
    last = len(layers) - 1
    for i, layer in enumerate(layers):
        kind = "Top" if i == 0 else ("Bottom" if i == last else "Middle")
        for j, v in enumerate(layer, 1):
            inputs[v] = e_label(tier, kind, color_of(j))


def _build(s: int, height: int, doubly: bool) -> ConstructionInstance:
    vp = list(range(s))
    ve, nxt = _tree_layers(s, s)
    ve2 = None
    if doubly:
        ve2, nxt = _tree_layers(len(ve[-1]), nxt)
    grid = [list(range(nxt + r * s, nxt + (r + 1) * s)) for r in range(height)]
    n = nxt + s * height
    inputs = ["M"] * n
    edges = []
    for i in range(s):
        inputs[vp[i]] = "P"
        if i + 1 < s:
            edges.append(arc(vp[i + 1], vp[i], "Spine"))
        edges.append(arc(ve[i][0], vp[i], "Link"))
        edges.append((vp[i], grid[0][i], "Attach", NONE))
    _tree_inputs(ve, 1, inputs)
    edges += _tree_edges(ve, "Tree", "Path")
    if ve2 is not None:
        _tree_inputs(ve2, 2, inputs)
        edges += _tree_edges(ve2, "Tree2", "Path2")
        for i, layer in enumerate(ve2):
            edges.append(arc(layer[0], ve[-1][i], "Link2"))
    for r in range(height):
        for c in range(s):
            if c + 1 < s:
                edges.append(arc(grid[r][c], grid[r][c + 1], "Horiz"))
            if r + 1 < height:
                edges.append(arc(grid[r][c], grid[r + 1][c], "Vert"))
    g = Graph(n, edges, inputs, DELTA)
    freeze = lambda rows: tuple(tuple(r) for r in rows)
    return ConstructionInstance(
        g, s, height, doubly, tuple(vp), freeze(ve), freeze(ve2) if ve2 else None, freeze(grid)
    )


def build_instance(s: int, height: int, doubly: bool = False) -> ConstructionInstance:
    if not isinstance(s, int) or s < 3:
        raise InvalidParameter(f"path length must be at least 3, got {s}")
    if not isinstance(height, int) or height < 1:
        raise InvalidParameter(f"grid height must be positive, got {height}")
    return _build(s, height, doubly)


def corrupt(inst: ConstructionInstance, kind: str) -> Graph:
    """Apply one named mutation and return the resulting labeled graph."""
    g = inst.graph
    if kind == "shorten-spine":
        return _build(2, inst.height, inst.doubly).graph
    edges = g.edges()
    inputs = list(g.inputs)
    if kind == "drop-tree-edge":
        first = next(i for i, e in enumerate(edges) if e[2] == "Tree")
        del edges[first]
    elif kind == "recolor-layer-node":
        v = inst.ve[1][0]
        tier, lvl, col = inputs[v].split(":")
        inputs[v] = f"{tier}:{lvl}:{3 - int(col)}"
    elif kind == "break-face":
        if inst.height < 2:
            raise InvalidMutation("break-face needs at least two grid rows")
        a, b = inst.cell(1, 2), inst.cell(1, 3)
        c, d = inst.cell(2, 2), inst.cell(2, 3)
        drop = {(min(a, c), max(a, c)), (min(b, d), max(b, d))}
        edges = [e for e in edges if (e[0], e[1]) not in drop]
        edges += [arc(a, d, "Vert"), arc(b, c, "Vert")]
    else:
        raise InvalidMutation(f"unknown mutation {kind!r}; expected one of {', '.join(MUTATIONS)}")
    return Graph(g.n, edges, inputs, g.max_degree)
