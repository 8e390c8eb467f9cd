"""Counting kernels: compiled core with a pure-Python fallback.

The compiled extension is selected at import time when present; set
COMMDEG_KERNELS=pure to force the fallback. ``BACKEND`` reports which
implementation is live.
"""
import os

if os.environ.get("COMMDEG_KERNELS", "").lower() == "pure":
    from commdeg.kernels import pure as _impl
else:
    try:
        from commdeg.kernels import _ctables as _impl  # type: ignore[attr-defined]
    except ImportError:
        from commdeg.kernels import pure as _impl

BACKEND = _impl.BACKEND
count_commuting_pairs = _impl.count_commuting_pairs
count_commuting_pairs_mn = _impl.count_commuting_pairs_mn
centralizer_sizes = _impl.centralizer_sizes

__all__ = [
    "BACKEND",
    "count_commuting_pairs",
    "count_commuting_pairs_mn",
    "centralizer_sizes",
]
