"""Select the mode-sum kernel at import time.

The compiled extension is used when it imports; setting
``SWAVEFILM_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _fallback

if os.environ.get("SWAVEFILM_PURE_PYTHON", "") not in ("", "0"):
    _kernel = None
else:
    try:
        from . import _kernel
    except ImportError:
        _kernel = None

BACKEND = "cython" if _kernel is not None else "numpy"
mode_block_sum = _kernel.mode_block_sum if _kernel is not None else _fallback.mode_block_sum
