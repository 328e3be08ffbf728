"""Selects the triad enumeration kernel at import time.

The compiled extension is used when it imported cleanly and the request
fits its 64-bit integer range; otherwise the pure-Python kernel runs.
Set CHORDPOWER_PURE=1 before import to force pure Python (useful for
benchmarking and for debugging kernel parity).
"""

from __future__ import annotations

import os

from chordpower import _enum_py

_cy = None
if os.environ.get("CHORDPOWER_PURE") != "1":
    try:
        from chordpower import _enum_cy as _cy  # type: ignore[no-redef]
    except ImportError:
        _cy = None

COMPILED_AVAILABLE = _cy is not None
COMPILED_MAX_N = _cy.MAX_N if _cy is not None else 0


def active_kernel(max_n: int) -> str:
    """Kernel name ("compiled" or "python") that a request would use."""
    if _cy is not None and max_n <= _cy.MAX_N:
        return "compiled"
    return "python"


def coprime_triads(max_n: int, octave_only: bool = False, kernel: str | None = None):
    """Raw enumeration rows; see chordpower._enum_py for the row layout.

    ``kernel`` forces "compiled" or "python"; by default the fastest
    applicable kernel is chosen.
    """
    name = kernel if kernel is not None else active_kernel(max_n)
    if name == "compiled":
        if _cy is None:
            raise RuntimeError("compiled kernel is not available in this install")
        return _cy.coprime_triads(max_n, octave_only)
    if name == "python":
        return _enum_py.coprime_triads(max_n, octave_only)
    raise ValueError(f"unknown kernel {name!r}")
