"""Timing comparisons between the spectrum routes and kernel backends.

All timings use the monotonic performance counter and report the median of
an odd number of repetitions, so a single noisy run cannot skew a ratio.
"""

from __future__ import annotations

import statistics
import time
from typing import Callable

import numpy as np

from . import _kernels_py, backend
from .cycle import inverse_rows
from .decomposition import spectrum_dense, spectrum_fast
from .topes import Tope


def _median_time(fn: Callable[[], object], reps: int) -> float:
    """Median wall time of fn over reps calls, in seconds."""
    if reps < 1 or reps % 2 == 0:
        raise ValueError("reps must be a positive odd number")
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def random_tope(t: int, seed: int = 0) -> Tope:
    rng = np.random.default_rng(seed)
    signs = rng.choice(np.array([-1, 1], dtype=np.int8), size=t)
    return Tope(signs)


def compare_spectrum_routes(t: int, reps: int = 9, seed: int = 0) -> dict:
    """Median times for the dense and linear spectrum routes at dimension t.

    The dense route materializes the t x t inverse rows, so it is only
    sensible at moderate t; the linear route handles t in the millions.
    """
    T = random_tope(t, seed)
    inverse_rows(t)  # build the cached matrix outside the timed region
    spectrum_fast(T)  # warm both code paths once
    spectrum_dense(T)
    dense = _median_time(lambda: spectrum_dense(T), reps)
    fast = _median_time(lambda: spectrum_fast(T), reps)
    return {
        "t": t,
        "reps": reps,
        "dense_seconds": dense,
        "fast_seconds": fast,
        "speedup": dense / fast if fast > 0 else float("inf"),
    }


def time_fast_spectrum(t: int, reps: int = 9, seed: int = 0) -> dict:
    """Median time of the linear spectrum route alone (large t)."""
    T = random_tope(t, seed)
    spectrum_fast(T)
    fast = _median_time(lambda: spectrum_fast(T), reps)
    return {"t": t, "reps": reps, "fast_seconds": fast, "backend": backend.BACKEND}


def compare_backends(t: int, reps: int = 9, seed: int = 0) -> dict:
    """Median times of the compiled and pure-Python spectrum kernels.

    Returns a dict with one entry per available backend; when the compiled
    extension is absent only the python timing is present.
    """
    T = random_tope(t, seed)
    signs = T.signs
    out = np.empty(t, dtype=np.int8)
    result = {"t": t, "reps": reps}
    _kernels_py.spectrum_signs(signs, out)
    result["python_seconds"] = _median_time(lambda: _kernels_py.spectrum_signs(signs, out), reps)
    if backend.has_compiled_kernels():
        from . import _kernels

        _kernels.spectrum_signs(signs, out)
        result["compiled_seconds"] = _median_time(lambda: _kernels.spectrum_signs(signs, out), reps)
        result["compiled_speedup"] = result["python_seconds"] / result["compiled_seconds"]
    return result


def run_bench(t: int, reps: int = 9, seed: int = 0) -> dict:
    """Full benchmark card: route comparison plus backend comparison.

    The dense route is skipped above 4096 because the t x t matrix becomes
    the dominant cost and tells nothing new about the linear route.
    """
    card = {"t": t, "reps": reps, "backend": backend.BACKEND}
    if t <= 4096:
        card["routes"] = compare_spectrum_routes(t, reps, seed)
    else:
        card["fast"] = time_fast_spectrum(t, reps, seed)
    card["kernels"] = compare_backends(t, reps, seed)
    return card
