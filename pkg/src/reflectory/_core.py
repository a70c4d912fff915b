"""Backend selection for the hot kernels.

The compiled extension is used when importable; ``REFLECTORY_PURE_PYTHON=1``
forces the numpy fallback.
"""

import os

from reflectory import _kernels_py

_compiled = None
if os.environ.get("REFLECTORY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from reflectory import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

kernels = _compiled if _compiled is not None else _kernels_py
BACKEND = "compiled" if _compiled is not None else "python"


def available_backends():
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
