"""Synchronous LOCAL execution in ball-collection form, LCL verification and view comparison."""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import InvalidLabeling, InvalidParameter, NonTermination, UnknownNode
from .graph_core import (
    Ball,
    Graph,
    ID_FREE,
    WITH_IDS,
    ball,
    ball_isomorphic,
    ball_order,
    extract_ball,
)

DEFAULT_ID_EXPONENT = 2


@dataclass(frozen=True)
class LclProblem:
    """A locally checkable problem given by a membership test on output-decorated balls.

    ``scope(g, v)``, when provided, lists the nodes whose outputs ``allowed``
    reads at center ``v``; enumeration uses it to check centers early.
    """

    delta: int
    radius: int
    sigma_in: frozenset[str]
    sigma_out: frozenset[str]
    allowed: Callable[[Ball], bool]
    scope: Callable[[Graph, int], Iterable[int]] | None = None
    name: str = "lcl"


@dataclass(frozen=True)
class LocalAlgorithm:
    """``decide(ball, rng, n)`` returns an output label, or None to keep collecting."""

    decide: Callable[[Ball, random.Random, int], str | None]
    max_rounds: int | None = None
    name: str = "algorithm"
    on_start: Callable[[Graph], None] | None = None
    delta: int | None = None


@dataclass(frozen=True)
class SimulationResult:
    outputs: dict[int, str]
    rounds_per_node: dict[int, int]
    max_round: int
    complete: bool = True

    def format(self) -> str:
        lines = [f"node {v} {self.outputs[v]}" for v in sorted(self.outputs)]
        lines += [f"round {v} {t}" for v, t in sorted(self.rounds_per_node.items())]
        return "\n".join(lines) + "\n"

    def labels(self) -> list[str]:
        return [self.outputs[v] for v in range(len(self.outputs))]


def _check_ids(g: Graph, ids: Sequence[int] | None, c: int) -> list[int]:
    if ids is None:
        return list(range(g.n))
    ids = list(ids)
    if len(ids) != g.n:
        raise InvalidParameter(f"expected {g.n} ids, got {len(ids)}")
    if len(set(ids)) != len(ids):
        raise InvalidParameter("ids must be distinct")
    bound = max(g.n, 2) ** c
    for x in ids:
        if not isinstance(x, int) or x < 0 or x >= bound:
            raise InvalidParameter(f"id {x!r} outside [0, {bound})")
    return ids


def simulate(
    alg: LocalAlgorithm,
    g: Graph,
    ids: Sequence[int] | None = None,
    seed: int = 0,
    c: int = DEFAULT_ID_EXPONENT,
) -> SimulationResult:
    """Run ``alg`` round by round; at round t each unfinished node sees its radius-t ball.

    Without an explicit ``max_rounds`` the cap is ``n``: by then every ball
    holds its whole component, so a node still undecided never will be.
    """
    ids = _check_ids(g, ids, c)
    if alg.delta is not None and g.n and max(g.degree(v) for v in g.nodes) > alg.delta:
        raise InvalidParameter(f"graph degree exceeds the algorithm's bound {alg.delta}")
    if alg.on_start is not None:
        alg.on_start(g)
    cap = alg.max_rounds if alg.max_rounds is not None else g.n
    rngs = {v: random.Random(f"{seed}:{v}") for v in g.nodes}
    orders = {v: [v] for v in g.nodes}
    dists: dict[int, dict[int, int]] = {v: {v: 0} for v in g.nodes}
    frontier = {v: [v] for v in g.nodes}
    outputs: dict[int, str] = {}
    rounds: dict[int, int] = {}
    pending = list(g.nodes)
    t = 0
    while pending:
        if t > cap:
            partial = SimulationResult(dict(outputs), dict(rounds), max(rounds.values(), default=0), False)
            raise NonTermination(f"{len(pending)} node(s) undecided after {cap} rounds", partial)
        if t:
            for v in pending:
                seen, nxt = dists[v], []
                for x in frontier[v]:
                    for y in g.adj[x]:
                        if y not in seen:
                            seen[y] = t
                            nxt.append(y)
                orders[v].extend(nxt)
                frontier[v] = nxt
        decided = {}
        for v in pending:
            order = orders[v]
            dv = dists[v]
            b = extract_ball(g, order, [dv[x] for x in order], v, t, WITH_IDS, ids)
            label = alg.decide(b, rngs[v], g.n)
            if label is not None:
                decided[v] = label
        for v, label in decided.items():
            outputs[v] = label
            rounds[v] = t
        pending = [v for v in pending if v not in decided]
        t += 1
    return SimulationResult(outputs, rounds, max(rounds.values(), default=0))


def _as_labels(p: LclProblem, g: Graph, out) -> list[str]:
    if isinstance(out, SimulationResult):
        out = out.outputs
    if isinstance(out, Mapping):
        missing = [v for v in g.nodes if v not in out]
        if missing:
            raise InvalidLabeling(f"no output for node(s) {missing[:5]}")
        labels = [out[v] for v in g.nodes]
    else:
        labels = list(out)
        if len(labels) != g.n:
            raise InvalidLabeling(f"expected {g.n} outputs, got {len(labels)}")
    for v, lab in enumerate(labels):
        if lab not in p.sigma_out:
            raise InvalidLabeling(f"node {v}: label {lab!r} is not an output label")
    return labels


def verify_lcl(p: LclProblem, g: Graph, out) -> tuple[bool, list[int]]:
    """Check every center's output-decorated radius-r ball; returns (ok, rejecting centers)."""
    labels = _as_labels(p, g, out)
    bad = [v for v in g.nodes if not p.allowed(ball(g, v, p.radius, ID_FREE, outputs=labels))]
    return not bad, bad


def indistinguishable(g: Graph, u: int, v: int, d: int) -> bool:
    for x in (u, v):
        if x not in g:
            raise UnknownNode(f"node {x!r} not in graph")
    return ball_isomorphic(ball(g, u, d), ball(g, v, d))


def _dependency_order(n: int, deps: list[set[int]]) -> list[int]:
    """Kahn order on 'v reads deps[v]'; cycles are broken at the smallest remaining node."""
    waiting = [len(deps[v]) for v in range(n)]
    readers: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for w in deps[v]:
            readers[w].append(v)
    done = [False] * n
    order: list[int] = []
    ready = sorted(v for v in range(n) if waiting[v] == 0)
    nxt_forced = 0
    while len(order) < n:
        if not ready:
            while done[nxt_forced]:
                nxt_forced += 1
            ready = [nxt_forced]
        v = ready.pop(0)
        if done[v]:
            continue
        done[v] = True
        order.append(v)
        for r in readers[v]:
            waiting[r] -= 1
            if waiting[r] == 0 and not done[r]:
                ready.append(r)
    return order


def enumerate_labelings(
    p: LclProblem, g: Graph, candidates: Callable[[int], Iterable[str]] | None = None
) -> Iterator[dict[int, str]]:
    """Every labeling accepted by ``verify_lcl``, by depth-first search.

    Nodes are assigned in dependency order of the problem's scopes, and each
    center is checked as soon as all outputs it reads are fixed.
    """
    n = g.n
    views = []
    scopes: list[set[int]] = []
    for v in g.nodes:
        order, dist = ball_order(g, v, p.radius)
        views.append((order, extract_ball(g, order, dist, v, p.radius, ID_FREE)))
        sc = set(p.scope(g, v)) if p.scope is not None else set(order)
        sc.add(v)
        scopes.append(sc)
    order = _dependency_order(n, [s - {v} for v, s in enumerate(scopes)])
    pos = {v: i for i, v in enumerate(order)}
    due: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        due[max(pos[w] for w in scopes[v])].append(v)
    labels = ["-"] * n
    pool = sorted(p.sigma_out)

    def accepted(center: int) -> bool:
        host, b = views[center]
        return p.allowed(dataclasses.replace(b, outputs=tuple(labels[w] for w in host)))

    def rec(i: int) -> Iterator[dict[int, str]]:
        if i == n:
            yield dict(enumerate(labels))
            return
        v = order[i]
        for lab in (candidates(v) if candidates is not None else pool):
            labels[v] = lab
            if all(accepted(c) for c in due[i]):
                yield from rec(i + 1)
        labels[v] = "-"

    if n == 0:
        yield {}
        return
    yield from rec(0)
