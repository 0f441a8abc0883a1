"""Backend selection for the pattern kernels.

The compiled module is used when it was built and ``HDTHOMPSON_PURE_PYTHON``
is unset; otherwise the Python reference runs. Calls that overflow the
compiled kernel's 64-bit coordinates are retried in Python.
"""

import os

from . import _pykernel

try:
    if os.environ.get("HDTHOMPSON_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _ckernel as _fast
except ImportError:
    _fast = None

BACKEND = "cython" if _fast is not None else "python"


def _wrap(name):
    slow = getattr(_pykernel, name)
    if _fast is None:
        return slow
    fast = getattr(_fast, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


canon = _wrap("canon")
apply_letters = _wrap("apply_letters")
compose = _wrap("compose")
left_quotient = _wrap("left_quotient")
right_quotient = _wrap("right_quotient")


def backends():
    """Available kernel modules by name, for tests and benchmarks."""
    out = {"python": _pykernel}
    if _fast is not None:
        out["cython"] = _fast
    return out
