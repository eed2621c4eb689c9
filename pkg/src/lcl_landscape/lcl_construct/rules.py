"""Locally checkable structure rules.

Every rule is evaluated at a center node and reads only nodes within three
hops of it, so the same code runs on a host graph or on a radius-3 ball
view.  Rule ids are listed in ``CATALOG`` and documented in docs/catalog.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..graph_core import Graph, ball, NONE
from .builder import ConstructionInstance, KINDS

RULE_RADIUS = 3
CHAIN_TYPES = ("Spine", "Link", "Tree", "Path", "Link2", "Tree2", "Path2")
TIER_TYPES = {
    1: {"tree": "Tree", "path": "Path", "link": "Link", "spine": "Spine"},
    2: {"tree": "Tree2", "path": "Path2", "link": "Link2", "spine": "Path"},
}
GRID_DEGREES = frozenset(
    [
        (1, 1, 1, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0),
        (0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0),
        # single-row grids
        (0, 0, 1, 1), (0, 0, 0, 1), (0, 0, 1, 0),
    ]
)

CATALOG = {
    "in-label": "input label outside the vocabulary for this mode",
    "edge-type": "edge type or orientation not allowed between these roles",
    "tree-in": "Top/Middle need exactly two incoming tree edges, Bottom none",
    "tree-out": "Middle/Bottom need exactly one outgoing tree edge, Top none",
    "path-top": "Top nodes carry no path edges",
    "path-deg": "Middle/Bottom carry one or two path edges, one in and one out when two",
    "color": "path edges join different colours; sinks are 1, sources 2, isolated 1",
    "sibling": "a path edge from colour 2 into colour 1 joins two children of one node",
    "sibling-path": "the two children of a node are joined by a path edge",
    "cousin": "a path edge from colour 1 into colour 2 joins children of path-adjacent parents",
    "cousin-conv": "children across a parent path edge are joined by a path edge the same way",
    "ends": "a parent lacks an out (in) path edge iff its colour-1 (colour-2) child does",
    "link-path": "a node with a link edge has no outgoing path edge",
    "link-one": "link bookkeeping: one link out of every path sink, one link into every path node",
    "link-kind": "link edges pair Top/Bottom/Middle with path sink/source/interior",
    "link-ladder": "consecutive path nodes are linked from a parent and its child",
    "p-deg": "path nodes have one or two path neighbours, at most one in and one out",
    "p-short": "a path component has fewer than three nodes",
    "p-attach": "path sink/source/interior touch a grid corner/corner/border node of matching kind",
    "p-ladder-m": "consecutive path nodes touch horizontally adjacent grid nodes in order",
    "m-deg": "grid degree pattern is not one of the allowed border/corner/inner cases",
    "m-face-UL": "up-left face does not close",
    "m-face-UR": "up-right face does not close",
    "m-face-DL": "down-left face does not close",
    "m-face-DR": "down-right face does not close",
    "m-attach": "bottom-row grid nodes touch exactly one matching path node; others touch none",
}


@dataclass(frozen=True)
class RuleViolation:
    node: int
    rule_id: str
    description: str


@lru_cache(maxsize=None)
def parse_role(token: str):
    """(role, tier, kind, color) for an input token, or None if unrecognised."""
    if token == "P":
        return ("P", 0, None, 0)
    if token == "M":
        return ("M", 0, None, 0)
    parts = token.split(":")
    if (
        len(parts) == 3
        and parts[0] in ("E1", "E2")
        and parts[1] in KINDS
        and parts[2] in ("1", "2")
    ):
        return ("E", int(parts[0][1]), parts[1], int(parts[2]))
    return None


def role_of(g: Graph, v: int, doubly: bool):
    r = parse_role(g.inputs[v])
    if r is not None and r[0] == "E" and r[1] == 2 and not doubly:
        return None
    return r


def is_prole(g: Graph, v: int, tier: int, doubly: bool) -> bool:
    """Does ``v`` play the path role for the given tier?"""
    r = role_of(g, v, doubly)
    if r is None:
        return False
    if tier == 1:
        return r[0] == "P"
    return doubly and r[0] == "E" and r[1] == 1 and r[2] == "Bottom"


def outs(g: Graph, v: int, etype: str) -> list[int]:
    return [w for w, t in g.out_arcs(v) if t == etype]


def ins(g: Graph, v: int, etype: str) -> list[int]:
    return [w for w, t in g.in_arcs(v) if t == etype]


def undirected(g: Graph, v: int, etype: str) -> list[int]:
    return [w for w in g.adj[v] if g.edge(v, w) == (etype, NONE)]


def grid_degree(g: Graph, v: int) -> tuple[int, int, int, int]:
    """(up, down, left, right) neighbour counts from Vert/Horiz arcs."""
    return (len(outs(g, v, "Vert")), len(ins(g, v, "Vert")),
            len(ins(g, v, "Horiz")), len(outs(g, v, "Horiz")))


def spine_outs(g: Graph, v: int, tier: int, doubly: bool) -> list[int]:
    st = TIER_TYPES[tier]["spine"]
    return [w for w in outs(g, v, st) if is_prole(g, w, tier, doubly)]


def spine_ins(g: Graph, v: int, tier: int, doubly: bool) -> list[int]:
    st = TIER_TYPES[tier]["spine"]
    return [w for w in ins(g, v, st) if is_prole(g, w, tier, doubly)]


def _edge_ok(g: Graph, x: int, y: int, rx, ry, doubly: bool) -> bool:
    t, o = g.edge(x, y)
    if rx is None or ry is None:
        return False
    kx, ky = rx[0], ry[0]
    directed = o != NONE
    if {kx, ky} == {"P", "M"}:
        return t == "Attach" and not directed
    if not directed:
        return False
    head_is_y = g.points(x, y)
    if kx == ky == "P":
        return t == "Spine"
    if kx == ky == "M":
        return t in ("Vert", "Horiz")
    if {kx, ky} == {"E", "P"}:
        e_side = x if kx == "E" else y
        er = rx if kx == "E" else ry
        return t == "Link" and er[1] == 1 and (head_is_y == (e_side == x))
    if kx == ky == "E":
        if rx[1] == ry[1] == 1:
            return t in ("Tree", "Path")
        if rx[1] == ry[1] == 2:
            return t in ("Tree2", "Path2")
        lo, hi = (x, y) if rx[1] == 2 else (y, x)
        lo_r = rx if rx[1] == 2 else ry
        hi_r = ry if rx[1] == 2 else rx
        return (
            t == "Link2" and hi_r[2] == "Bottom" and lo_r[1] == 2 and g.points(lo, hi)
        )
    return False


def _e_rules(g: Graph, x: int, r, doubly: bool, out: list) -> None:
    _, tier, kind, color = r
    tt = TIER_TYPES[tier]
    tree_t, path_t, link_t = tt["tree"], tt["path"], tt["link"]
    in_t, out_t = ins(g, x, tree_t), outs(g, x, tree_t)
    in_p, out_p = ins(g, x, path_t), outs(g, x, path_t)

    def col(v):
        rv = role_of(g, v, doubly)
        return rv[3] if rv is not None and rv[0] == "E" else None

    if kind in ("Top", "Middle") and len(in_t) != 2:
        out.append(("tree-in", f"{kind} node has {len(in_t)} incoming tree edges"))
    if kind == "Bottom" and in_t:
        out.append(("tree-in", "Bottom node has incoming tree edges"))
    if kind in ("Middle", "Bottom") and len(out_t) != 1:
        out.append(("tree-out", f"{kind} node has {len(out_t)} outgoing tree edges"))
    if kind == "Top" and out_t:
        out.append(("tree-out", "Top node has an outgoing tree edge"))
    n_path = len(in_p) + len(out_p)
    if kind == "Top" and n_path:
        out.append(("path-top", "Top node has path edges"))
    if kind in ("Middle", "Bottom"):
        if not 1 <= n_path <= 2 or (n_path == 2 and (len(in_p), len(out_p)) != (1, 1)):
            out.append(("path-deg", f"path edges in={len(in_p)} out={len(out_p)}"))
    for y in in_p + out_p:
        if col(y) == color:
            out.append(("color", f"path neighbour {y} has the same colour"))
    if len(in_p) == 1 and not out_p and color != 1:
        out.append(("color", "path sink must have colour 1"))
    if len(out_p) == 1 and not in_p and color != 2:
        out.append(("color", "path source must have colour 2"))
    if n_path == 0 and color != 1:
        out.append(("color", "node without path edges must have colour 1"))

    # path arcs v -> u touching x
    for u, v in [(x, y) for y in in_p] + [(y, x) for y in out_p]:
        cu, cv = col(u), col(v)
        pu, pv = outs(g, u, tree_t), outs(g, v, tree_t)
        if cu == 1 and cv == 2 and not set(pu) & set(pv):
            out.append(("sibling", f"path edge {v}->{u} does not join siblings"))
        if cu == 2 and cv == 1:
            if not any(w in outs(g, xx, path_t) for w in pu for xx in pv):
                out.append(("cousin", f"parents of {v}->{u} are not joined {v}'s parent -> {u}'s parent"))

    if len(in_t) == 2:
        a, b = in_t
        if not g.has_edge(a, b) or g.edge_type(a, b) != path_t:
            out.append(("sibling-path", f"children {a} and {b} are not joined by a path edge"))
        ones = [c for c in in_t if col(c) == 1]
        twos = [c for c in in_t if col(c) == 2]
        for u in ones:
            if (not out_p) != (not outs(g, u, path_t)):
                out.append(("ends", f"outgoing path edge of {x} and its colour-1 child {u} disagree"))
        for v in twos:
            if (not in_p) != (not ins(g, v, path_t)):
                out.append(("ends", f"incoming path edge of {x} and its colour-2 child {v} disagree"))
        # x <- y path arcs where y also has two children
        for y in in_p:
            cy = ins(g, y, tree_t)
            if len(cy) != 2:
                continue
            for u in twos:
                for v in (c for c in cy if col(c) == 1):
                    if u not in outs(g, v, path_t):
                        out.append(("cousin-conv", f"expected path edge {v}->{u}"))

    links = outs(g, x, link_t)
    if links and out_p:
        out.append(("link-path", "linked node has an outgoing path edge"))
    if not out_p and len(links) != 1:
        out.append(("link-one", f"path sink has {len(links)} outgoing links"))
    for u in links:
        if not is_prole(g, u, tier, doubly):
            continue
        so, si = spine_outs(g, u, tier, doubly), spine_ins(g, u, tier, doubly)
        top_like = not out_t and not so
        bottom_like = not in_t and not si
        middle_like = in_t and out_t and si and so
        if not (top_like or bottom_like or middle_like):
            out.append(("link-kind", f"link {x}->{u} pairs mismatched kinds"))


def _prole_rules(g: Graph, x: int, tier: int, doubly: bool, out: list) -> None:
    tt = TIER_TYPES[tier]
    link_t, tree_t, path_t = tt["link"], tt["tree"], tt["path"]

    def link_tails(v):
        return [w for w in ins(g, v, link_t) if (role_of(g, w, doubly) or ("?",))[0] == "E"]

    good = [w for w in link_tails(x) if not outs(g, w, path_t)]
    if len(good) != 1:
        out.append(("link-one", f"path node has {len(good)} incoming links from path sinks"))
    for y in spine_ins(g, x, tier, doubly):
        ok = any(w in outs(g, z, tree_t) for w in link_tails(x) for z in link_tails(y))
        if not ok:
            out.append(("link-ladder", f"links of {x} and {y} are not parent and child"))


def _p_rules(g: Graph, x: int, doubly: bool, out: list) -> None:
    so, si = spine_outs(g, x, 1, doubly), spine_ins(g, x, 1, doubly)
    if len(so) > 1 or len(si) > 1 or not (so or si):
        out.append(("p-deg", f"path node has in={len(si)} out={len(so)}"))
    seen = {x}
    frontier = [x]
    for _ in range(2):
        nxt = []
        for v in frontier:
            for w in spine_outs(g, v, 1, doubly) + spine_ins(g, v, 1, doubly):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    if len(seen) < 3:
        out.append(("p-short", f"path component has {len(seen)} node(s)"))
    ms = [m for m in undirected(g, x, "Attach") if (role_of(g, m, doubly) or ("?",))[0] == "M"]
    degs = {m: grid_degree(g, m) for m in ms}
    if not so and not any(d[1] == 0 and d[2] == 0 for d in degs.values()):
        out.append(("p-attach", "path sink lacks a lower-left grid corner"))
    if not si and not any(d[1] == 0 and d[3] == 0 for d in degs.values()):
        out.append(("p-attach", "path source lacks a lower-right grid corner"))
    if so and si and not any(d[1] == 0 and d[2] == 1 and d[3] == 1 for d in degs.values()):
        out.append(("p-attach", "interior path node lacks a bottom-border grid node"))
    for y in si:
        my = [m for m in undirected(g, y, "Attach") if (role_of(g, m, doubly) or ("?",))[0] == "M"]
        if not any(z in outs(g, w, "Horiz") for w in ms for z in my):
            out.append(("p-ladder-m", f"grid nodes of {x} and {y} are not left/right neighbours"))


_FACES = (
    ("m-face-UL", ("Vert", 1), ("Horiz", -1), ("Vert", -1), ("Horiz", 1)),
    ("m-face-UR", ("Vert", 1), ("Horiz", 1), ("Vert", -1), ("Horiz", -1)),
    ("m-face-DL", ("Vert", -1), ("Horiz", -1), ("Vert", 1), ("Horiz", 1)),
    ("m-face-DR", ("Vert", -1), ("Horiz", 1), ("Vert", 1), ("Horiz", -1)),
)


def _step(g: Graph, v: int, move) -> list[int]:
    etype, sign = move
    return outs(g, v, etype) if sign > 0 else ins(g, v, etype)


def _m_rules(g: Graph, x: int, doubly: bool, out: list) -> None:
    d = grid_degree(g, x)
    if d not in GRID_DEGREES:
        out.append(("m-deg", f"grid degree pattern {d}"))
    for rule, m1, m2, m3, back in _FACES:
        if not _step(g, x, m1) or not _step(g, x, (back[0], -back[1])):
            continue
        closed = any(
            x in _step(g, z, back)
            for v in _step(g, x, m1)
            for w in _step(g, v, m2)
            for z in _step(g, w, m3)
        )
        if not closed:
            out.append((rule, "face does not close"))
    ps = [p for p in undirected(g, x, "Attach") if (role_of(g, p, doubly) or ("?",))[0] == "P"]
    if d[1] == 0:
        if len(ps) != 1:
            out.append(("m-attach", f"bottom-row node touches {len(ps)} path nodes"))
        else:
            p = ps[0]
            so, si = spine_outs(g, p, 1, doubly), spine_ins(g, p, 1, doubly)
            if d[2] == 0 and so:
                out.append(("m-attach", "lower-left corner is not attached to a path sink"))
            if d[3] == 0 and si:
                out.append(("m-attach", "lower-right corner is not attached to a path source"))
            if d[2] and d[3] and not (so and si):
                out.append(("m-attach", "bottom-border node is not attached to an interior path node"))
    elif ps:
        out.append(("m-attach", "grid node above the bottom row touches the path"))


def violations_at(g: Graph, x: int, doubly: bool = False) -> list[tuple[str, str]]:
    """(rule_id, description) pairs for every rule failing at center ``x``."""
    out: list[tuple[str, str]] = []
    r = role_of(g, x, doubly)
    if r is None:
        return [("in-label", f"unrecognised input label {g.inputs[x]!r}")]
    for y in g.adj[x]:
        if not _edge_ok(g, x, y, r, role_of(g, y, doubly), doubly):
            t, o = g.edge(x, y)
            out.append(("edge-type", f"edge {x}-{y} of type {t} ({o}) not allowed"))
    if r[0] == "E":
        _e_rules(g, x, r, doubly, out)
        if is_prole(g, x, 2, doubly):
            _prole_rules(g, x, 2, doubly, out)
    elif r[0] == "P":
        _prole_rules(g, x, 1, doubly, out)
        _p_rules(g, x, doubly, out)
    else:
        _m_rules(g, x, doubly, out)
    return out


def is_broken(g: Graph, x: int, doubly: bool = False) -> bool:
    return bool(violations_at(g, x, doubly))


def check_rules(target, doubly: bool | None = None) -> list[RuleViolation]:
    """All rule violations, each evaluated on the radius-3 ball around its center."""
    if isinstance(target, ConstructionInstance):
        g = target.graph
        if doubly is None:
            doubly = target.doubly
    else:
        g = target
    doubly = bool(doubly)
    found = []
    for x in range(g.n):
        view = ball(g, x, RULE_RADIUS).view
        for rule, text in violations_at(view, 0, doubly):
            found.append(RuleViolation(x, rule, text))
    return found
