"""Kernel backend selection.

The env flag FROBSCAN_BACKEND chooses between the numba-jitted kernels and
the pure-numpy fallback:

    FROBSCAN_BACKEND=numba   require numba (ImportError if missing)
    FROBSCAN_BACKEND=numpy   force the pure-numpy kernels
    FROBSCAN_BACKEND=auto    numba if importable, else numpy (default)

`set_backend` overrides the flag programmatically (used by the benchmark and
the backend-equivalence tests).
"""

import os

_current = None


def set_backend(name):
    """Force a backend ('numpy', 'numba', 'auto') for this process."""
    global _current
    _current = _load(name)
    return _current


def get_kernels():
    global _current
    if _current is None:
        _current = _load(os.environ.get("FROBSCAN_BACKEND", "auto"))
    return _current


def _load(name):
    name = name.lower()
    if name == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba
    if name != "auto":
        raise ValueError(f"unknown backend {name!r}")
    try:
        from . import _kernels_numba
        return _kernels_numba
    except ImportError:
        from . import _kernels_numpy
        return _kernels_numpy
