"""Kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set the environment variable BETASKEL_NO_EXT=1 before import to force the
pure-Python backend (used by the benchmark and by backend-parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("BETASKEL_NO_EXT"):
    _impl = _kernels_py
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

KERNEL_BACKEND = "compiled" if _impl is not _kernels_py else "python"


def pair_death_betas(points, pairs, eps_rel, closed):
    """Smallest beta at which each candidate pair becomes blocked.

    Returns an array of thresholds, one per pair; +inf marks pairs that no
    third point ever blocks.  Under the closed rule a pair is an edge at beta
    iff beta < threshold; under the open rule iff beta <= threshold.
    """
    return _impl.pair_death_betas(points, pairs, float(eps_rel), bool(closed))
