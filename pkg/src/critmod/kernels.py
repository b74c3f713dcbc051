"""Backend selection for the hot kernels.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python module stands in.  :func:`use_backend` switches explicitly, which
the tests and the benchmark use to run both.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available_backends():
    return sorted(_BACKENDS)


def backend():
    return _active.BACKEND


def use_backend(name):
    """Select ``"python"`` or ``"compiled"``; returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    prev = _active.BACKEND
    _active = _BACKENDS[name]
    return prev


def acyclic_codes(n, pairs, sink=-1):
    return _active.acyclic_codes(n, pairs, sink)


def gf2_rank_extended(base, extra=()):
    return _active.gf2_rank_extended(base, extra)


def gf2_rank(rows):
    return _active.gf2_rank_extended(rows, ())[0]
