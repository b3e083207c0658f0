"""Polynomial kernel selection: compiled extension if available, else pure Python.

Set ``P1REDUCE_PURE=1`` in the environment to force the pure-Python kernel
(used by the benchmark and to debug suspected kernel discrepancies).
"""

import os

if os.environ.get("P1REDUCE_PURE") == "1":
    from . import _poly_py as _impl
else:
    try:
        from . import _poly_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as _impl

BACKEND = _impl.BACKEND
poly_trim = _impl.poly_trim
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
poly_gcd = _impl.poly_gcd
