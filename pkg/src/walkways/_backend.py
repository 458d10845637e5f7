"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``WALKWAYS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("WALKWAYS_PURE", "") not in ("", "0"):
    from . import _pure as kernels
else:
    try:
        from . import _core as kernels
    except ImportError:  # extension not built
        from . import _pure as kernels

COMPILED: bool = kernels.COMPILED

__all__ = ["kernels", "COMPILED"]
