"""Kernel backend selection.

The compiled extension is preferred when it imports; the numpy fallback is
always available.  CYCLOTOPE_BACKEND=python or CYCLOTOPE_BACKEND=compiled
forces the choice (forcing "compiled" raises if the extension is missing).
"""

import os

from . import _kernels_py

_forced = os.environ.get("CYCLOTOPE_BACKEND", "").strip().lower()

if _forced == "python":
    _impl = _kernels_py
    BACKEND = "python"
elif _forced == "compiled":
    from . import _kernels as _impl  # noqa: F401

    BACKEND = "compiled"
elif _forced:
    raise ValueError(f"CYCLOTOPE_BACKEND must be 'python' or 'compiled', got {_forced!r}")
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

spectrum_signs = _impl.spectrum_signs
tally_negpart_size = _impl.tally_negpart_size


def has_compiled_kernels() -> bool:
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        return False
    return True
