# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops: Turing-machine stepping and BFS ball counts."""


def tm_run(const int[:] nxt, const int[:] wrt, const int[:] mov,
           const int[:] accepting, int n_sym, int[:] tape,
           int head, int state, long long step_cap):
    """Run until acceptance, a missing transition, or ``step_cap`` steps.

    Returns (steps, state, head, status) with status 0 accepted, 1 cap hit,
    2 missing transition, 3 head left the tape.
    """
    cdef long long steps = 0
    cdef int idx, ns
    cdef Py_ssize_t n = tape.shape[0]
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


def bfs_counts(const int[:] indptr, const int[:] indices, int src, int d_max):
    """Cumulative ball sizes |N^d(src)| for d = 0..d_max over a CSR adjacency."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef int[:] dist
    cdef int[:] queue
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef int x, y, d
    from array import array
    dist_arr = array('i', [-1]) * n
    queue_arr = array('i', [0]) * n
    dist = dist_arr
    queue = queue_arr
    per = [0] * (d_max + 1)
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        d = dist[x]
        per[d] += 1
        if d == d_max:
            continue
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if dist[y] < 0:
                dist[y] = d + 1
                queue[tail] = y
                tail += 1
    total = 0
    out = []
    for d in range(d_max + 1):
        total += per[d]
        out.append(total)
    return out
