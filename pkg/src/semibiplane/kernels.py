"""Kernel backend selection.

The compiled extension ``semibiplane._speedups`` is used when importable;
otherwise the pure-Python kernels take over. Set the environment variable
``SEMIBIPLANE_PURE=1`` before import to force the pure backend.
"""

from __future__ import annotations

import os

from . import _kernels_py

_impl = _kernels_py
if not os.environ.get("SEMIBIPLANE_PURE"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND: str = "compiled" if _impl is not _kernels_py else "pure-python"

semiplanar_witness = _impl.semiplanar_witness
search_tables = _impl.search_tables
