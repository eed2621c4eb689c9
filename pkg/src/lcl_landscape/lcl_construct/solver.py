"""Local algorithm solving the construction problem.

Path and tree nodes look for a rule failure reachable backwards from each
path sink they lead to; when one exists, the error pointer chain follows the
backward BFS tree (smallest id first) from the nearest failing node.  Grid
nodes evaluate their forced label bottom-up as soon as everything it depends
on is inside their view.

Two things make grid nodes stop early:

* a proof of ``*``: below the node sits a stack of locally valid full-width
  rows tall enough that the machine must have accepted (or been excused)
  underneath, and everything above an acceptance is ``*``;
* the view has closed over the whole component; cyclic dependencies then
  resolve to ``*``, which is always consistent.
"""

from __future__ import annotations

from ..errors import Timeout
from ..graph_core import Ball, Graph
from ..local_sim import LocalAlgorithm
from ..turing import DEFAULT_STEP_CAP, ZERO, TuringMachine, run
from .builder import DELTA
from .problem import (
    DASH,
    STAR,
    _check_tokens,
    advance,
    chain_ins,
    chain_outs,
    err_label,
    first_row_label,
    grid_deps,
    path_anchor,
)
from .rules import RULE_RADIUS, grid_degree, ins, role_of, violations_at

UNKNOWN = None


class _View:
    """What a node knows at radius t: adjacency up to t-1, rule status up to t-3."""

    def __init__(self, b: Ball, broken_cache: dict, doubly: bool):
        self.g = b.view
        self.ids = b.ids
        self.dist = b.dist
        self.t = b.radius
        self.closed = max(b.dist) < b.radius
        self.cache = broken_cache
        self.doubly = doubly
        self.chains: dict[int, tuple[bool, dict[int, str]] | None] = {}

    def adj_known(self, x: int) -> bool:
        return self.closed or self.dist[x] <= self.t - 1

    def broken(self, x: int) -> bool | None:
        key = self.ids[x]
        if key in self.cache:
            return self.cache[key]
        if self.closed or self.dist[x] <= self.t - RULE_RADIUS:
            val = bool(violations_at(self.g, x, self.doubly))
            self.cache[key] = val
            return val
        return None

    def chain_to(self, z: int):
        """(failure found, {node: pointer type}) for sink ``z``, or None if not yet decidable."""
        if z in self.chains:
            return self.chains[z]
        res = self._chain_to(z)
        self.chains[z] = res
        return res

    def _chain_to(self, z: int):
        ids = self.ids
        parent: dict[int, tuple[int, str] | None] = {z: None}
        layer = [z]
        while layer:
            status = [self.broken(y) for y in layer]
            if None in status:
                return None
            bad = [y for y, s in zip(layer, status) if s]
            if bad:
                y = min(bad, key=lambda v: ids[v])
                path = {}
                while parent[y] is not None:
                    nxt, t = parent[y]
                    path[y] = t
                    y = nxt
                return True, path
            nxt_layer: dict[int, tuple[int, str]] = {}
            for y in sorted(layer, key=lambda v: ids[v]):
                if not self.adj_known(y):
                    return None
                for w, t in chain_ins(self.g, y, self.doubly):
                    if w not in parent and w not in nxt_layer:
                        nxt_layer[w] = (y, t)
            parent.update(nxt_layer)
            layer = list(nxt_layer)
        return False, {}


def _pe_label(k: _View, x: int) -> str | None:
    g, doubly = k.g, k.doubly
    reach = {x}
    stack = [x]
    sinks = []
    while stack:
        y = stack.pop()
        if not k.adj_known(y):
            return None
        outs_y = chain_outs(g, y, doubly)
        if not outs_y and role_of(g, y, doubly)[0] == "P":
            sinks.append(y)
        for w, _ in outs_y:
            if w not in reach:
                reach.add(w)
                stack.append(w)
    types = set()
    for z in sorted(sinks, key=lambda v: k.ids[v]):
        res = k.chain_to(z)
        if res is None:
            return None
        if x in res[1]:
            types.add(res[1][x])
    return err_label(types) if types else DASH


class ConstructionSolver:
    def __init__(self, m: TuringMachine, doubly: bool = False, step_cap: int = DEFAULT_STEP_CAP):
        _check_tokens(m)
        self.m = m
        self.doubly = doubly
        self.step_cap = step_cap
        self._times: dict[int, int | None] = {}
        self._broken: dict[int, bool] = {}

    def reset(self, g: Graph | None = None) -> None:
        self._broken = {}

    def accept_time(self, width: int) -> int | None:
        """Steps to accept on a row of this width; None if not within the cap."""
        if width < 3:
            return 0
        if width not in self._times:
            try:
                self._times[width] = run(self.m, ZERO * (width - 2), self.step_cap).steps
            except Timeout:
                self._times[width] = None
        return self._times[width]

    # grid -------------------------------------------------------------

    def _grid_label(self, k: _View, x: int, memo: dict, active: set):
        if x in memo:
            return memo[x]
        if x in active:
            return UNKNOWN
        active.add(x)
        res = self._grid_eval(k, x, memo, active)
        active.discard(x)
        memo[x] = res
        return res

    def _grid_eval(self, k: _View, x: int, memo: dict, active: set):
        br = k.broken(x)
        if br:
            return STAR
        if br is None or not k.adj_known(x):  # a cached status can outlive the view
            return UNKNOWN
        g = k.g
        deg = grid_degree(g, x)
        if deg[1] == 0:
            if deg[2] == 0:
                p = path_anchor(g, x, self.doubly)
                res = k.chain_to(p)
                if res is None:
                    return UNKNOWN
                return first_row_label(self.m, deg, None, res[0])
            left = self._grid_label(k, ins(g, x, "Horiz")[0], memo, active)
            if left is UNKNOWN:
                return UNKNOWN
            return first_row_label(self.m, deg, left, False)
        d, ld, rd = grid_deps(g, x)
        labs = [self._grid_label(k, y, memo, active) if y is not None else DASH for y in (d, ld, rd)]
        if STAR in labs:
            return STAR
        if UNKNOWN in labs:
            return UNKNOWN
        return advance(self.m, labs[0], labs[1] if ld is not None else None, labs[2] if rd is not None else None)

    def _star_certificate(self, k: _View, x: int) -> bool:
        g = k.g
        cone = [x]
        depth, stop = 0, None
        seen = set()
        while True:
            key = frozenset(cone)
            if key in seen:  # periodic column: every deeper row is known and valid
                return stop is not None
            seen.add(key)
            for y in cone:
                if k.broken(y) is not False or not k.adj_known(y) or grid_degree(g, y)[1] != 1:
                    return False
            degs = [grid_degree(g, y) for y in cone]
            full = any(d[2] == 0 for d in degs) and any(d[3] == 0 for d in degs)
            if stop is None and full:
                a = self.accept_time(len(cone))
                if a is None:
                    return False
                stop = depth + a + len(cone) + 1
            if stop is not None and depth >= stop:
                return True
            nxt = set()
            for y in cone:
                for z in grid_deps(g, y):
                    if z is not None:
                        nxt.add(z)
            cone = sorted(nxt)
            depth += 1

    # entry point ------------------------------------------------------

    def decide(self, b: Ball, rng, n: int) -> str | None:
        g = b.view
        r = role_of(g, 0, self.doubly)
        if r is None:
            return DASH
        k = _View(b, self._broken, self.doubly)
        if r[0] != "M":
            return _pe_label(k, 0)
        lab = self._grid_label(k, 0, {}, set())
        if lab is not UNKNOWN:
            return lab
        if k.closed or self._star_certificate(k, 0):
            return STAR
        return None

    def algorithm(self) -> LocalAlgorithm:
        return LocalAlgorithm(
            decide=self.decide,
            name="construction-solver",
            on_start=self.reset,
            delta=DELTA,
        )


def solver(m: TuringMachine, doubly: bool = False, step_cap: int = DEFAULT_STEP_CAP) -> LocalAlgorithm:
    return ConstructionSolver(m, doubly, step_cap).algorithm()
