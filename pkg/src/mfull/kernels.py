"""Backend selection for the mod-p row-reduction kernels.

The compiled extension is preferred when present; MFULL_PURE_PYTHON=1 forces
the pure-Python fallback.  Fraction-free integer rank always comes from the
Python module (its arbitrary-precision arithmetic gains nothing from C).
"""

import os

from mfull import _kernels_py

if os.environ.get("MFULL_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from mfull import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
rank_mod_p = _impl.rank_mod_p
rref_mod_p = _impl.rref_mod_p
rank_bareiss = _kernels_py.rank_bareiss
