"""Kernel backend selection.

The compiled extension is preferred; the pure-Python fallback is used when
the extension has not been built.  Set MOCD_KERNEL=python (or =compiled) to
force a backend; with an explicit setting, failure to load is an error.
"""
from __future__ import annotations

import os
from types import ModuleType

_VALID = {"auto", "compiled", "python"}


def load_kernel(name: str = "auto") -> ModuleType:
    """Return the kernel module for `name` ("auto", "compiled" or "python")."""
    if name not in _VALID:
        raise ValueError(f"unknown kernel backend {name!r}; choose one of {sorted(_VALID)}")
    if name == "python":
        from . import _fallback

        return _fallback
    try:
        from . import _speedups  # type: ignore[attr-defined]

        return _speedups
    except ImportError:
        if name == "compiled":
            raise
        from . import _fallback

        return _fallback


_requested = os.environ.get("MOCD_KERNEL", "auto").strip().lower()
kernel = load_kernel(_requested)
BACKEND = "compiled" if kernel.__name__.endswith("_speedups") else "python"

decode_population = kernel.decode_population
population_stats = kernel.population_stats
nondominated_ranks = kernel.nondominated_ranks
