"""Gate-kernel backend selection.

The compiled Cython kernels are preferred; if the extension is missing
(e.g. no C compiler at install time) the NumPy kernels take over with
identical semantics. ``BACKEND`` names the active implementation.
"""

from . import _numpy_backend

try:
    from . import _cykernels as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _impl = _numpy_backend
    BACKEND = "numpy"

apply_w_fiber = _impl.apply_w_fiber
apply_mc_2x2 = _impl.apply_mc_2x2


def available_backends():
    """Names of the kernel implementations importable in this install."""
    names = ["numpy"]
    if BACKEND == "cython":
        names.append("cython")
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ("numpy" or "cython")."""
    if name == "numpy":
        return _numpy_backend
    if name == "cython":
        if BACKEND != "cython":
            raise ValueError("cython kernels are not built in this install")
        return _impl
    raise ValueError(f"unknown kernel backend {name!r}")
