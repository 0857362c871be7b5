"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise the
pure-Python twin is imported. Both expose ``expm_series``,
``sweep_cascade`` and ``squaring_steps`` with identical semantics.
"""
try:
    from . import _ckernels as _impl
except ImportError:  # extension not built
    from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
expm_series = _impl.expm_series
sweep_cascade = _impl.sweep_cascade
squaring_steps = _impl.squaring_steps
balance_exponent = _impl.balance_exponent

__all__ = ["BACKEND", "expm_series", "sweep_cascade", "squaring_steps", "balance_exponent"]
