"""Array kernels with a numba backend and a pure-numpy fallback.

The numba backend is used when numba imports and ``SKEWCODE_DISABLE_NUMBA``
is unset (or "0"); both backends return identical results.
"""

import os

from . import _numpy as numpy_backend

try:
    if os.environ.get("SKEWCODE_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no"):
        raise ImportError("numba disabled by SKEWCODE_DISABLE_NUMBA")
    from . import _numba as numba_backend
except ImportError:
    numba_backend = None

_impl = numba_backend or numpy_backend
BACKEND = "numba" if numba_backend is not None else "numpy"

fold_mul_batch = _impl.fold_mul_batch
right_remainder_batch = _impl.right_remainder_batch
rref = _impl.rref
in_span_batch = _impl.in_span_batch
span_enumerate = _impl.span_enumerate
dot_batch = _impl.dot_batch

__all__ = [
    "BACKEND",
    "numpy_backend",
    "numba_backend",
    "fold_mul_batch",
    "right_remainder_batch",
    "rref",
    "in_span_batch",
    "span_enumerate",
    "dot_batch",
]
