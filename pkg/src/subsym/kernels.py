"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SUBSYM_PURE_PYTHON=1 to force the fallback (useful for the benchmark and
for debugging the compiled path).
"""

import os

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

if _kernels_c is not None and not os.environ.get("SUBSYM_PURE_PYTHON"):
    _impl = _kernels_c
    ACTIVE = "cython"
else:
    _impl = _kernels_py
    ACTIVE = "python"

bfs_distances = _impl.bfs_distances
all_pairs_distances = _impl.all_pairs_distances
