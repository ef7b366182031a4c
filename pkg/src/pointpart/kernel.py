"""Kernel selection.

Imports the compiled kernel when available, otherwise the pure-Python one.
``POINTPART_KERNEL=python`` forces the fallback, ``POINTPART_KERNEL=cython``
makes a missing compiled kernel a hard error. ``IMPLEMENTATION`` records
which one is active.

``POINTPART_BUDGET`` sets the default node budget for every exact search
(coloring solves, coloring enumeration, critical-graph enumeration).
"""

from __future__ import annotations

import os

_requested = os.environ.get("POINTPART_KERNEL", "auto").lower()

if _requested == "python":
    from . import _kernel_py as _impl

    IMPLEMENTATION = "python"
elif _requested == "cython":
    from . import _kernel_cy as _impl  # type: ignore[no-redef]

    IMPLEMENTATION = "cython"
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "cython"
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "python"

peel_subset = _impl.peel_subset
is_sd_subset = _impl.is_sd_subset
greedy_seed = _impl.greedy_seed
chi_exact = _impl.chi_exact
canonical_label = _impl.canonical_label

DEFAULT_BUDGET = int(os.environ.get("POINTPART_BUDGET", 100_000_000))


def default_budget(budget=None) -> int:
    return DEFAULT_BUDGET if budget is None else int(budget)
