"""Pure-Python twins of the compiled kernels; same signatures and results."""

from __future__ import annotations

from collections import deque


def tm_run(nxt, wrt, mov, accepting, n_sym, tape, head, state, step_cap):
    steps = 0
    n = len(tape)
    while True:
        if accepting[state]:
            return steps, state, head, 0
        if steps >= step_cap:
            return steps, state, head, 1
        idx = state * n_sym + tape[head]
        ns = nxt[idx]
        if ns < 0:
            return steps, state, head, 2
        tape[head] = wrt[idx]
        head += mov[idx]
        state = ns
        steps += 1
        if head < 0 or head >= n:
            return steps, state, head, 3


def bfs_counts(indptr, indices, src, d_max):
    dist = {src: 0}
    per = [0] * (d_max + 1)
    queue = deque([src])
    while queue:
        x = queue.popleft()
        d = dist[x]
        per[d] += 1
        if d == d_max:
            continue
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    out, total = [], 0
    for c in per:
        total += c
        out.append(total)
    return out
