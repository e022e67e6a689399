"""Kernel dispatch: the compiled extension when present, else pure Python.

Set GROTHLAT_PURE=1 to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("GROTHLAT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

mul_terms = _impl.mul_terms
dd_terms = _impl.dd_terms
enumerate_grid = _impl.enumerate_grid
