"""Eigensolver backend selection: compiled extension if present, else pure Python.

Set GAINSPECTRA_FORCE_PURE=1 in the environment to skip the extension.
"""
from __future__ import annotations

import os

if os.environ.get("GAINSPECTRA_FORCE_PURE"):
    from ._eigen_py import solve as kernel_solve

    KERNEL_BACKEND = "python"
else:
    try:
        from ._eigen_cy import solve as kernel_solve

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from ._eigen_py import solve as kernel_solve

        KERNEL_BACKEND = "python"

__all__ = ["kernel_solve", "KERNEL_BACKEND"]
