"""Sweep kernel selection: compiled extension when available, numpy fallback
otherwise. Set MWF_FORCE_PY_KERNEL=1 to force the fallback."""

import os

if os.environ.get("MWF_FORCE_PY_KERNEL") == "1":
    from ._sweep_py import BACKEND, sweep_kernel
else:
    try:
        from ._sweep import BACKEND, sweep_kernel
    except ImportError:
        from ._sweep_py import BACKEND, sweep_kernel

__all__ = ["sweep_kernel", "BACKEND"]
