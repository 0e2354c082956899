"""Kernel backend selection.

The compiled extension is preferred when importable; UARG_PURE_PYTHON=1
forces the fallback.  Both backends return identical, ascending mask lists,
so everything downstream is backend-agnostic.
"""

from __future__ import annotations

import os

from . import _kernels_py

MODE_CONFLICT_FREE = _kernels_py.MODE_CONFLICT_FREE
MODE_ADMISSIBLE = _kernels_py.MODE_ADMISSIBLE
MODE_COMPLETE = _kernels_py.MODE_COMPLETE
MODE_STABLE = _kernels_py.MODE_STABLE

DEP_IMPLY = _kernels_py.DEP_IMPLY
DEP_OR = _kernels_py.DEP_OR
DEP_NAND = _kernels_py.DEP_NAND

_COMPILED_WIDTH = 62  # compiled kernels use 64-bit masks

if os.environ.get("UARG_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def backend_name() -> str:
    return BACKEND


def semantics_masks(n: int, attackers: list[int], targets: list[int],
                    mode: int) -> list[int]:
    if n > _COMPILED_WIDTH:
        return _kernels_py.semantics_masks(n, attackers, targets, mode)
    return _impl.semantics_masks(n, attackers, targets, mode)


def dependency_masks(n: int, deps: list[tuple[int, int, int]]) -> list[int]:
    if n > _COMPILED_WIDTH:
        return _kernels_py.dependency_masks(n, deps)
    return _impl.dependency_masks(n, deps)
