"""Hot polynomial and orbit kernels.

The compiled module is used when it was built; otherwise, or when
``DRINFELD_PURE_PYTHON`` is set to a non-empty value, the pure-Python
versions are used. ``BACKEND`` names the active choice.
"""

import os

if os.environ.get("DRINFELD_PURE_PYTHON"):
    from . import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as _impl
        BACKEND = "python"

trim = _impl.trim
mul = _impl.mul
divmod_ = _impl.divmod_
rem = _impl.rem
gcd = _impl.gcd
orbit_labels = _impl.orbit_labels

__all__ = ["BACKEND", "trim", "mul", "divmod_", "rem", "gcd", "orbit_labels"]
