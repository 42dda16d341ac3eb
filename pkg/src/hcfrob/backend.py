"""Selects the polynomial-arithmetic kernel at import time.

The compiled extension is used when it imported cleanly and the modulus of
the ring at hand fits in 63 bits; otherwise the pure-Python routines run.
Set HCFROB_PURE=1 in the environment to force the fallback (the benchmark
in benchmarks/ does exactly that for its comparison run).
"""

import os

from . import _purepoly

if os.environ.get("HCFROB_PURE"):
    _impl = _purepoly
else:
    try:
        from . import _fastpoly as _impl
    except ImportError:
        _impl = _purepoly

COMPILED = _impl.COMPILED

KERNEL_MODULUS_LIMIT = 1 << 63


def backend_name():
    return "compiled" if COMPILED else "pure"


def kernel_for(modulus):
    """Kernel module to use for coefficient lists modulo ``modulus``."""
    if COMPILED and modulus < KERNEL_MODULUS_LIMIT:
        return _impl
    return _purepoly
