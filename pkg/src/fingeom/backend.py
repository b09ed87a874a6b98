"""Kernel backend selection.

Hot loops in this package are written njit-compatibly and compiled with
numba by default.  Setting ``FINGEOM_BACKEND=numpy`` runs the same code
uncompiled on plain numpy (slow but dependency-light); a handful of
kernels additionally ship vectorized numpy variants that the fallback
path picks up.  ``benchmarks/bench_backends.py`` compares the two.
"""

from __future__ import annotations

import os
import warnings

_requested = os.environ.get("FINGEOM_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"FINGEOM_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    HAS_NUMBA = False
else:
    try:
        import numba

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover
        if _requested == "numba":
            warnings.warn("numba requested but not importable; using numpy fallback")
        HAS_NUMBA = False

ACTIVE = "numba" if HAS_NUMBA else "numpy"

if HAS_NUMBA:
    from numba import njit, prange

    njit = njit  # re-export
    prange = prange
else:
    def njit(*args, **kwargs):
        """Identity decorator: run the kernel source as plain Python/numpy."""
        if args and callable(args[0]) and len(args) == 1 and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap

    prange = range


def set_threads(n: int) -> None:
    """Bound worker threads for parallel kernels (no-op on the numpy path)."""
    if HAS_NUMBA and n > 0:
        import numba

        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
