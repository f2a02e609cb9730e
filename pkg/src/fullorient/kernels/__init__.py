"""Enumeration kernels with import-time backend selection.

The compiled Cython kernel is used when it has been built and the
``FULLORIENT_PURE`` environment variable is unset; otherwise the
pure-Python kernel is used.  Graphs over 64 vertices always take the pure
path.  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import importlib
import os

from . import _pure

try:
    if os.environ.get("FULLORIENT_PURE"):
        raise ImportError("pure backend forced")
    _compiled = importlib.import_module("._fast", __name__)
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
MAX_FAST_VERTICES = 64


def _pick(n: int):
    return _compiled if _compiled is not None and n <= MAX_FAST_VERTICES else _pure


def histogram(n, adj, split=0, part=0, nparts=1):
    return _pick(n).histogram(n, adj, split, part, nparts)


def min_dependent(n, adj):
    return _pick(n).min_dependent(n, adj)


def first_match(n, adj, clique, lo, hi):
    return _pick(n).first_match(n, adj, clique, lo, hi)


iter_orientations = _pure.iter_orientations

__all__ = ["BACKEND", "histogram", "min_dependent", "first_match", "iter_orientations"]
