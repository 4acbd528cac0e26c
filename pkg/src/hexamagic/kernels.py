"""Kernel lane selection: compiled extension if available, else pure Python.

Set HEXAMAGIC_PURE=1 to force the pure lane (used by the benchmark and
the lane-equivalence tests).
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("HEXAMAGIC_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

LANE: str = _impl.LANE
pentagram_cliques = _impl.pentagram_cliques
wa_triples = _impl.wa_triples

pure = _kernels_py


def compiled_available() -> bool:
    try:
        from . import _kernels  # noqa: F401
        return True
    except ImportError:
        return False
