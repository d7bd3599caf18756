"""Select the polynomial kernel backend at import time.

The compiled extension (_poly_cy) is preferred when it was built; the
pure-Python module (_poly_py) is the fallback and the reference
implementation.  Set QTOROIDAL_PURE=1 to force the fallback.
"""

import os

if os.environ.get("QTOROIDAL_PURE"):
    from . import _poly_py as _backend
else:
    try:
        from . import _poly_cy as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as _backend

BACKEND = "compiled" if _backend.__name__.endswith("_poly_cy") else "pure"

mono_mul = _backend.mono_mul
mono_pow = _backend.mono_pow
poly_add = _backend.poly_add
poly_neg = _backend.poly_neg
poly_scale = _backend.poly_scale
poly_mono_scale = _backend.poly_mono_scale
poly_mul = _backend.poly_mul
poly_content = _backend.poly_content
