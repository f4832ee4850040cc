"""Select the integer kernel implementation at import time.

The compiled module is used when it was built and ``MEYER_PURE_PYTHON`` is
unset.  A compiled call that overflows 64 bits is transparently retried on
the pure-Python path, so results never depend on which backend ran.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("MEYER_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels_c
except ImportError:
    _kernels_c = None

BACKEND = "cython" if _kernels_c is not None else "python"


def _dispatch(name):
    py = getattr(_kernels_py, name)
    if _kernels_c is None:
        return py
    c = getattr(_kernels_c, name)

    def call(*args):
        try:
            return c(*args)
        except OverflowError:
            return py(*args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


rref_int = _dispatch("rref_int")
kernel_int = _dispatch("kernel_int")
inertia_int = _dispatch("inertia_int")
matmul_int = _dispatch("matmul_int")
