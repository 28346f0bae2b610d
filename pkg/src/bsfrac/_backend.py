"""Numeric backend selection.

The compiled extension ``bsfrac._ckernels`` is preferred when importable;
``bsfrac._pykernels`` is the drop-in pure-Python twin.  Set the
environment variable ``BSFRAC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("BSFRAC_PURE_PYTHON"):
    from . import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as kernels  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
