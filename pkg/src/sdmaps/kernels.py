"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Set ``SDMAPS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("SDMAPS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

orbit_labels = _impl.orbit_labels
extend_morphism = _impl.extend_morphism
traversal_code = _impl.traversal_code

__all__ = ["BACKEND", "orbit_labels", "extend_morphism", "traversal_code"]
