"""Select the compiled kernels when available, else the pure-Python ones.

Set ``YOUNGPOWERS_KERNELS=python`` to force the fallback.
"""

import importlib
import os

from . import _pykernels


def load(name: str):
    """Return the kernel module for ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        return importlib.import_module("youngpowers._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if os.environ.get("YOUNGPOWERS_KERNELS") == "python":
        return "python", _pykernels
    try:
        return "compiled", load("compiled")
    except ImportError:
        return "python", _pykernels


BACKEND, _impl = _select()

rank_words = _impl.rank_words
orbit_labels = _impl.orbit_labels
pair_orbit_labels = _impl.pair_orbit_labels
pair_index = _pykernels.pair_index
