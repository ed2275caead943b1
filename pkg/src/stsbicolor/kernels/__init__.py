"""Search kernels with a compiled fast path.

The Cython build (``_fast``) is used when it was compiled at install time;
otherwise the pure-Python reference (``_pure``) backs the same two
functions. Set ``STSBICOLOR_PURE=1`` to force the pure path.
"""

import os

from . import _pure

FOUND = _pure.FOUND
EXHAUSTED = _pure.EXHAUSTED
BUDGET = _pure.BUDGET

_backend = _pure
if not os.environ.get("STSBICOLOR_PURE"):
    try:
        from . import _fast as _backend  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "cython" if _backend is not _pure else "python"
exact_cover = _backend.exact_cover
bicolor_search = _backend.bicolor_search


def backends():
    """Return the importable kernel modules keyed by name."""
    found = {"python": _pure}
    try:
        from . import _fast
    except ImportError:
        pass
    else:
        found["cython"] = _fast
    return found


__all__ = [
    "BACKEND",
    "BUDGET",
    "EXHAUSTED",
    "FOUND",
    "backends",
    "bicolor_search",
    "exact_cover",
]
