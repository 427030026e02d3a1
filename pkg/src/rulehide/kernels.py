"""Backend selection for the support-counting kernels.

The compiled extension is used when it imports; setting
``RULEHIDE_PURE_PYTHON=1`` forces the fallback. Both expose ``BitIndex``
with ``count``, ``tids``, ``discard`` and ``copy``.
"""
import os

from rulehide import _pykernels

if os.environ.get("RULEHIDE_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from rulehide import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BitIndex = _impl.BitIndex
BACKEND = "cython" if _impl is not _pykernels else "python"

__all__ = ["BitIndex", "BACKEND"]
