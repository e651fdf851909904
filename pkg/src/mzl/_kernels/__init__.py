"""Kernel backend selection.

The compiled extension is preferred when present; set MZL_KERNELS=pure to force
the reference implementation, or MZL_KERNELS=compiled to fail loudly when the
extension is missing.
"""
from __future__ import annotations

import os

_forced = os.environ.get("MZL_KERNELS")

if _forced == "pure":
    from mzl._kernels import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from mzl._kernels import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        from mzl._kernels import _pure as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

bareiss_det = _impl.bareiss_det
poly_mul = _impl.poly_mul
poly_addmul_shifted = _impl.poly_addmul_shifted
eval_poly_row_mod = _impl.eval_poly_row_mod
hankel_dets_row_mod = _impl.hankel_dets_row_mod

__all__ = [
    "BACKEND",
    "bareiss_det",
    "poly_mul",
    "poly_addmul_shifted",
    "eval_poly_row_mod",
    "hankel_dets_row_mod",
]
