"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``PRIMEREP_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    if os.environ.get("PRIMEREP_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernels


compiled = _load_compiled()
python = _kernels_py

BACKEND = "compiled" if compiled is not None else "python"
_active = compiled if compiled is not None else python

sieve_segment = _active.sieve_segment
bertrand_violations = _active.bertrand_violations


def backends() -> dict[str, ModuleType]:
    """All importable kernel implementations, keyed by name."""
    out = {"python": python}
    if compiled is not None:
        out["compiled"] = compiled
    return out
