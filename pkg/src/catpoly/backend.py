"""Selects the term-merge kernel at import time.

The compiled extension is preferred when present; setting the environment
variable ``CATPOLY_BACKEND=python`` forces the pure-Python kernel (used by
the benchmark and the backend-agreement tests).
"""

import os

from . import _termops_py

_forced = os.environ.get("CATPOLY_BACKEND", "").strip().lower()

if _forced in ("python", "pure", "py"):
    _impl = _termops_py
    BACKEND = "python"
elif _forced in ("compiled", "c", "cython"):
    from . import _termops as _impl  # noqa: F401  (ImportError is the right failure)

    BACKEND = "compiled"
else:
    try:
        from . import _termops as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _termops_py
        BACKEND = "python"

mul_into = _impl.mul_into


def available_backends():
    """Name -> mul_into for every importable kernel (benchmark helper)."""
    impls = {"python": _termops_py.mul_into}
    try:
        from . import _termops

        impls["compiled"] = _termops.mul_into
    except ImportError:
        pass
    return impls
