"""Kernel backend selection.

The geometry kernels exist twice: numba-compiled (``_kernels_numba``) and
pure numpy (``_kernels_numpy``).  The active backend is chosen once at
import time from the ``BSPFOREST_BACKEND`` environment variable:

* unset       -- numba when importable, numpy otherwise
* ``numba``   -- require the numba kernels (ImportError if unavailable)
* ``numpy``   -- force the pure-numpy fallback

``benchmarks/bench_kernels.py`` compares the two.
"""

import os

_requested = os.environ.get("BSPFOREST_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"BSPFOREST_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import _kernels_numpy as kernels
    BACKEND = "numpy"
elif _requested == "numba":
    from . import _kernels_numba as kernels
    BACKEND = "numba"
else:
    try:
        from . import _kernels_numba as kernels
        BACKEND = "numba"
    except ImportError:
        from . import _kernels_numpy as kernels
        BACKEND = "numpy"

GEOM_TOL = kernels.GEOM_TOL
