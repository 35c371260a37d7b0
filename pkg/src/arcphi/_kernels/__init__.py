"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; otherwise
the pure-Python kernels take over.  ``ARCPHI_PURE=1`` in the environment
forces the pure backend (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("ARCPHI_PURE") == "1":
    impl = _pure
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _pure

BACKEND = impl.BACKEND_NAME

in_set = impl.in_set
f_window = impl.f_window
g_window = impl.g_window
phi_arcs = impl.phi_arcs
integral_f_circle = impl.integral_f_circle
mc_pair_count = impl.mc_pair_count
count_mono = impl.count_mono
brute_search = impl.brute_search


def available_backends() -> dict:
    """Importable backend modules keyed by name (for tests/benchmarks)."""
    backends = {"pure": _pure}
    try:
        from . import _core

        backends["compiled"] = _core
    except ImportError:
        pass
    return backends
