"""Kernel dispatch: compiled normal-form core with pure-Python fallback.

Set BRAIDKIT_PURE=1 to force the pure-Python kernel (used by the
benchmark and by CI to exercise both twins).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("BRAIDKIT_PURE"):
    _impl = _kernel_py
    KERNEL = "python"
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        _impl = _kernel_py
        KERNEL = "python"

left_normal_form_raw = _impl.left_normal_form
