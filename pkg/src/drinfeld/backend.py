"""Kernel selection.

The compiled extension is used when it imports and the field fits its
limits (p < 2**15 for prime fields, q <= 1024 for extension fields).
Setting ``DRINFELD_PURE_PYTHON=1`` forces the pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _kernel as _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

FORCE_PYTHON = os.environ.get("DRINFELD_PURE_PYTHON", "") not in ("", "0")


def compiled_available() -> bool:
    return _ckernel is not None


def select(p: int, q: int, *, prefer_compiled: bool | None = None):
    """Return the kernel module to use for F_q."""
    if prefer_compiled is None:
        prefer_compiled = not FORCE_PYTHON
    if not prefer_compiled or _ckernel is None:
        return _pykernel
    if p == q and p < 2**15:
        return _ckernel
    if p != q and q <= 1024:
        return _ckernel
    return _pykernel


def default_backend_name() -> str:
    return "python" if FORCE_PYTHON or _ckernel is None else "compiled"
