"""Backend selection for the reduction kernels.

The compiled extension ``dualis._ckernels`` is used when it was built;
otherwise the pure-Python module with the identical interface is used.
:func:`use_backend` switches at runtime (benchmarks and tests use it to
run both paths).
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available():
    return sorted(_BACKENDS)


def active():
    return _active


def backend_name():
    return _active.BACKEND


def use_backend(name):
    """Select ``"python"`` or ``"cython"``; returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"kernel backend {name!r} not available (have {available()})")
    previous = _active.BACKEND
    _active = _BACKENDS[name]
    return previous
