"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from lcl_landscape import _kernels_py, kernels
from lcl_landscape.graph_core import generate_T
from lcl_landscape.turing import ZERO, machine_from_spec

try:
    from lcl_landscape import _kernels as compiled
except ImportError:
    compiled = None


def tm_case(spec: str, k: int):
    m = machine_from_spec(spec)
    tb = m.tables()
    tape = [tb["ai"][a] for a in ("<", *ZERO * k, ">")]
    args = (tb["nxt"], tb["wrt"], tb["mov"], tb["acc"], tb["n_sym"])
    q0 = tb["si"][m.init]

    def go(mod):
        return lambda: mod.tm_run(*args, kernels.int_array(tape), 0, q0, 10**9)

    return go


def bfs_case(k: int, s: int):
    g = generate_T(k, s).tree
    ip, ix = kernels.csr(g)

    def go(mod):
        return lambda: mod.bfs_counts(ip, ix, 0, g.n)

    return go


CASES = [
    ("tm_run counter:2 on 0^12", tm_case("counter:2", 12)),
    ("tm_run division:2+counter:4 on 0^12", tm_case("division:2+counter:4", 12)),
    ("bfs_counts T(3,12)", bfs_case(3, 12)),
    ("bfs_counts T(2,60)", bfs_case(2, 60)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; only the Python kernels are available")
    print(f"{'case':40s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, make in CASES:
        py = min(timeit.repeat(make(_kernels_py), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:40s} {py:10.2f} {'-':>10s} {'-':>8s}")
            continue
        cy = min(timeit.repeat(make(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:40s} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
