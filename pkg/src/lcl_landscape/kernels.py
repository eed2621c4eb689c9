"""Pick the compiled kernels when the extension is built, else the Python ones.

Set ``LCL_LANDSCAPE_PURE=1`` to force the Python implementation.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

BACKEND = "python"
tm_run = _kernels_py.tm_run
bfs_counts = _kernels_py.bfs_counts

if not os.environ.get("LCL_LANDSCAPE_PURE"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        tm_run = _kernels.tm_run
        bfs_counts = _kernels.bfs_counts
        BACKEND = "cython"


def int_array(values) -> array:
    return array("i", values)


def csr(graph) -> tuple[array, array]:
    """CSR adjacency arrays for a Graph."""
    indptr = array("i", [0])
    indices = array("i")
    for v in range(graph.n):
        indices.extend(graph.adj[v])
        indptr.append(len(indices))
    return indptr, indices
