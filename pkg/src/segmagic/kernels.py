"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SEGMAGIC_PURE=1 to force the pure-Python kernel (used by the benchmark
to compare both).
"""

from __future__ import annotations

import os

if os.environ.get("SEGMAGIC_PURE"):
    from . import _kernel_py as _impl

    KERNEL = "pure-python (forced)"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        KERNEL = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        KERNEL = "pure-python"

product_square_indices = _impl.product_square_indices
