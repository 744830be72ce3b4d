"""Kernel dispatch: numba-jitted hot loops with a pure-numpy fallback.

Set LIECHAR_NUMBA=0 to force the numpy path (used by the benchmark and by
CI environments without a working numba).  Both paths are exact integer
computations with identical outputs.
"""

from __future__ import annotations

import os

_want_numba = os.environ.get("LIECHAR_NUMBA", "1") != "0"
BACKEND = "numpy"

if _want_numba:
    try:
        from . import _kernels_numba as _impl

        BACKEND = "numba"
    except ImportError:  # numba missing or broken: fall back silently
        from . import _kernels_numpy as _impl
else:
    from . import _kernels_numpy as _impl

matmul_many_one = _impl.matmul_many_one
matmul_one_many = _impl.matmul_one_many
matmul_pairs = _impl.matmul_pairs
pack_codes = _impl.pack_codes
lookup_codes = _impl.lookup_codes
inverse_many = _impl.inverse_many
frobenius_many = _impl.frobenius_many
right_mul_index = _impl.right_mul_index
conj_index = _impl.conj_index
