"""Kernel backend selection.

The compiled extension (indivlab._fastcore) is used when it imported
cleanly and the instance fits its fixed-width limits (64-bit vertex
masks, moderate integer coefficients); anything larger silently takes
the pure-Python path, which has no limits. INDIVLAB_BACKEND=pure forces
the fallback, INDIVLAB_BACKEND=fast refuses to start without the
extension (useful in benchmarks and CI).
"""

from __future__ import annotations

import os

from . import _purecore

FOUND = _purecore.FOUND
EXHAUSTED = _purecore.EXHAUSTED
BUDGET = _purecore.BUDGET

_mode = os.environ.get("INDIVLAB_BACKEND", "auto")
if _mode not in ("auto", "fast", "pure"):
    raise RuntimeError("INDIVLAB_BACKEND must be auto, fast or pure")

_fast = None
if _mode != "pure":
    try:
        from . import _fastcore as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None
        if _mode == "fast":
            raise RuntimeError(
                "INDIVLAB_BACKEND=fast but the compiled kernels are not "
                "built; reinstall without INDIVLAB_SKIP_EXT"
            ) from None

# The compiled scans count scaled subset values in int64; keep a wide
# safety margin for the alpha = p/q coefficients they may be handed.
_COEFF_LIMIT = 1 << 30


def backend_name() -> str:
    """Which kernel implementation this process selected at import."""
    return "fast" if _fast is not None else "pure"


def find_embedding(a_rows, order, b_rows, allowed):
    if _fast is not None and len(b_rows) <= 64 and len(a_rows) <= 64:
        return _fast.find_embedding(a_rows, order, b_rows, allowed)
    return _purecore.find_embedding(a_rows, order, b_rows, allowed)


def zero_coloring_search(n, k, copies, budget, fix_first):
    if _fast is not None and n <= 64 and k <= 64 and budget < (1 << 62):
        return _fast.zero_coloring_search(n, k, copies, budget, fix_first)
    return _purecore.zero_coloring_search(n, k, copies, budget, fix_first)


def max_density_subset(rows):
    if _fast is not None and len(rows) <= 26:
        return _fast.max_density_subset(rows)
    return _purecore.max_density_subset(rows)


def min_delta_subset(rows, p, q):
    if (
        _fast is not None
        and len(rows) <= 26
        and 0 <= p < _COEFF_LIMIT
        and 0 < q < _COEFF_LIMIT
    ):
        return _fast.min_delta_subset(rows, p, q)
    return _purecore.min_delta_subset(rows, p, q)
