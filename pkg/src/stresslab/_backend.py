"""Selects the row-reduction kernel at import time.

Prefers the compiled extension and falls back to the pure-Python twin,
so the package works from a plain source checkout.  ``STRESSLAB_BACKEND``
can force either one (``cython`` / ``python``) for benchmarking.
"""

import os

_forced = os.environ.get("STRESSLAB_BACKEND")

if _forced == "python":
    from . import _rowred_py as kernel
elif _forced == "cython":
    from . import _rowred as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _rowred as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _rowred_py as kernel

BACKEND = kernel.BACKEND
echelon = kernel.echelon
rank_int = kernel.rank
rref_int = kernel.rref
