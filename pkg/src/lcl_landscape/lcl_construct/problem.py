"""The labeling problem attached to a machine: error pointers, grid transcript and excuses.

Output labels:

* ``-``             nothing to report (path/tree nodes, unrecognised nodes)
* ``err:T1+T2``     every outgoing edge of the listed types carries an error pointer
* ``*``             excused grid cell
* ``a`` / ``a@q``   grid cell holding tape symbol ``a``, with the head in state ``q``

Grid labels are forced: a cell's label is a function of the labels below it,
so a valid instance has exactly one accepted labeling.
"""

from __future__ import annotations

from collections import OrderedDict
from itertools import combinations

from ..errors import MalformedMachine
from ..graph_core import Ball, Graph
from ..local_sim import LclProblem
from ..turing import LEFT_END, RIGHT_END, ZERO, TuringMachine
from .builder import DELTA, KINDS, e_label
from .rules import (
    CHAIN_TYPES,
    RULE_RADIUS,
    grid_degree,
    ins,
    outs,
    role_of,
    undirected,
    violations_at,
)

DASH, STAR, ERR = "-", "*", "err:"
RADIUS = RULE_RADIUS + 1


def err_label(types) -> str:
    chosen = set(types)
    return ERR + "+".join(t for t in CHAIN_TYPES if t in chosen)


def parse_err(label: str) -> frozenset[str] | None:
    if not label.startswith(ERR):
        return None
    return frozenset(label[len(ERR):].split("+"))


def parse_cell(label: str) -> tuple[str, str | None]:
    sym, _, q = label.partition("@")
    return sym, (q or None)


def head_label(sym: str, q: str) -> str:
    return f"{sym}@{q}"


def _check_tokens(m: TuringMachine) -> None:
    for tok in (*m.states, *m.alphabet):
        if "@" in tok or "*" in tok or tok == DASH or tok.startswith(ERR):
            raise MalformedMachine(f"token {tok!r} clashes with the output label syntax")


def advance(m: TuringMachine, down: str, left_down: str | None, right_down: str | None) -> str:
    """Label of a cell from the three cells below it (missing neighbours are None)."""
    if STAR in (down, left_down, right_down):
        return STAR
    sym, q = parse_cell(down)
    if q is not None:
        tr = m.delta.get((q, sym))
        if tr is None:
            return STAR
        sym = tr[1]
    arrivals = []
    for lab, move in ((left_down, "R"), (right_down, "L")):
        if lab is None:
            continue
        a, q2 = parse_cell(lab)
        if q2 is None:
            continue
        tr = m.delta.get((q2, a))
        if tr is not None and tr[2] == move:
            arrivals.append(tr[0])
    if len(arrivals) > 1 or (arrivals and arrivals[0] in m.accept):
        return STAR
    return head_label(sym, arrivals[0]) if arrivals else sym


def first_row_label(m: TuringMachine, deg: tuple[int, int, int, int], left: str | None, excused: bool) -> str:
    """Bottom-row cell: the initial configuration unless excused from the left."""
    if deg[2] == 0:
        return STAR if excused else head_label(LEFT_END, m.init)
    if left == STAR:
        return STAR
    return RIGHT_END if deg[3] == 0 else ZERO


def is_pe(g: Graph, v: int, doubly: bool) -> bool:
    r = role_of(g, v, doubly)
    return r is not None and r[0] in ("P", "E")


def chain_outs(g: Graph, v: int, doubly: bool) -> list[tuple[int, str]]:
    return [(w, t) for w, t in g.out_arcs(v) if t in CHAIN_TYPES and is_pe(g, w, doubly)]


def chain_ins(g: Graph, v: int, doubly: bool) -> list[tuple[int, str]]:
    return [(w, t) for w, t in g.in_arcs(v) if t in CHAIN_TYPES and is_pe(g, w, doubly)]


def path_anchor(g: Graph, v: int, doubly: bool) -> int | None:
    ps = [p for p in undirected(g, v, "Attach") if (role_of(g, p, doubly) or ("?",))[0] == "P"]
    return ps[0] if len(ps) == 1 else None


def grid_deps(g: Graph, v: int) -> tuple[int, int | None, int | None] | None:
    """(down, left of down, right of down) for a cell above the bottom row."""
    down = ins(g, v, "Vert")
    if len(down) != 1:
        return None
    d = down[0]
    ld, rd = ins(g, d, "Horiz"), outs(g, d, "Horiz")
    return d, (ld[0] if len(ld) == 1 else None), (rd[0] if len(rd) == 1 else None)


def incoming_error(g: Graph, v: int, labels, doubly: bool) -> bool:
    for w, t in chain_ins(g, v, doubly):
        types = parse_err(labels[w])
        if types and t in types:
            return True
    return False


class _BrokenCache:
    """Per-view memo of rule failures; the view object is kept alive with its entry."""

    def __init__(self, doubly: bool, size: int = 4096):
        self.doubly = doubly
        self.size = size
        self.data: OrderedDict[int, tuple[Graph, dict[int, bool]]] = OrderedDict()

    def __call__(self, g: Graph, v: int) -> bool:
        key = id(g)
        entry = self.data.get(key)
        if entry is None or entry[0] is not g:
            entry = (g, {})
            self.data[key] = entry
            if len(self.data) > self.size:
                self.data.popitem(last=False)
        memo = entry[1]
        if v not in memo:
            memo[v] = bool(violations_at(g, v, self.doubly))
        return memo[v]


def expected_grid_label(m: TuringMachine, g: Graph, v: int, labels, doubly: bool, broken) -> str:
    if broken(g, v):
        return STAR
    deg = grid_degree(g, v)
    if deg[1] == 0:
        if deg[2] == 0:
            p = path_anchor(g, v, doubly)
            excused = p is None or broken(g, p) or incoming_error(g, p, labels, doubly)
            return first_row_label(m, deg, None, excused)
        return first_row_label(m, deg, labels[ins(g, v, "Horiz")[0]], False)
    d, ld, rd = grid_deps(g, v)
    return advance(
        m, labels[d], labels[ld] if ld is not None else None, labels[rd] if rd is not None else None
    )


def _output_alphabet(m: TuringMachine) -> frozenset[str]:
    out = {DASH, STAR}
    for k in range(1, len(CHAIN_TYPES) + 1):
        out.update(err_label(c) for c in combinations(CHAIN_TYPES, k))
    out.update(m.alphabet)
    out.update(head_label(a, q) for a in m.alphabet for q in m.states if q not in m.accept)
    return frozenset(out)


def input_alphabet(doubly: bool) -> frozenset[str]:
    tiers = (1, 2) if doubly else (1,)
    return frozenset(
        ["P", "M"] + [e_label(t, k, c) for t in tiers for k in KINDS for c in (1, 2)]
    )


def lcl_problem_of(m: TuringMachine, doubly: bool = False) -> LclProblem:
    _check_tokens(m)
    broken = _BrokenCache(doubly)

    def allowed(b: Ball) -> bool:
        g, labels = b.view, b.outputs
        lab = labels[0]
        r = role_of(g, 0, doubly)
        if r is None:
            return lab == DASH
        if r[0] == "M":
            return lab == expected_grid_label(m, g, 0, labels, doubly, broken)
        if lab == DASH:
            return True
        types = parse_err(lab)
        if not types:
            return False
        have = {t for _, t in chain_outs(g, 0, doubly)}
        if not types <= have:
            return False
        return broken(g, 0) or incoming_error(g, 0, labels, doubly)

    def scope(g: Graph, v: int) -> list[int]:
        r = role_of(g, v, doubly)
        if r is None:
            return [v]
        if r[0] != "M":
            return [v] + [w for w, _ in chain_ins(g, v, doubly)]
        if broken(g, v):
            return [v]
        deg = grid_degree(g, v)
        if deg[1] == 0:
            if deg[2] == 0:
                p = path_anchor(g, v, doubly)
                return [v] + ([w for w, _ in chain_ins(g, p, doubly)] if p is not None else [])
            return [v, ins(g, v, "Horiz")[0]]
        return [v] + [w for w in grid_deps(g, v) if w is not None]

    return LclProblem(
        delta=DELTA,
        radius=RADIUS,
        sigma_in=input_alphabet(doubly),
        sigma_out=_output_alphabet(m),
        allowed=allowed,
        scope=scope,
        name="construction-doubly" if doubly else "construction",
    )
