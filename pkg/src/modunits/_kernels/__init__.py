"""Hot inner loops for series multiplication, division and elimination.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``MODUNITS_PURE_PYTHON=1``
forces the fallback. ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("MODUNITS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

mul_trunc = _impl.mul_trunc
div_unit_trunc = _impl.div_unit_trunc
eta_recurrence = _impl.eta_recurrence
axpy_ff = _impl.axpy_ff


def backends() -> dict:
    """Every importable backend by name, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


__all__ = ["BACKEND", "backends", "mul_trunc", "div_unit_trunc", "eta_recurrence", "axpy_ff"]
