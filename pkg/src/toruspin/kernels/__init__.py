"""Kernel backend selection: compiled extension when available, pure Python
otherwise. Set TORUSPIN_PURE_KERNELS=1 to force the pure backend."""

from __future__ import annotations

import os

from . import pure

if os.environ.get("TORUSPIN_PURE_KERNELS"):
    _backend = pure
else:
    try:
        from . import _fast as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = pure

BACKEND = _backend.NAME
alignment_table = _backend.alignment_table

__all__ = ["BACKEND", "alignment_table", "pure"]
