"""Counting formulas for decomposition sizes, with an enumeration cross-check.

The central table counts topes by (j, l) where j is the size of the negative
part and l the size of the minimal decomposition.  Closed forms exist for
every cell; enumerate_statistics tallies all 2^t topes as an independent
check.  Counts are exact arbitrary-precision integers throughout.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

import numpy as np

from . import backend
from .errors import CapExceeded, CyclotopeError
from .topes import _check_dimension

ENUMERATION_CAP = 20

_CASES = ("left-only", "right-only", "both-ends", "neither")


def _binom0(n: int, k: int) -> int:
    """Binomial coefficient with the everywhere-zero out-of-range convention."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def composition_count(m: int, n: int) -> int:
    """Number of ways to write n as an ordered sum of m positive parts.

    Equals C(n-1, m-1); in particular 0 when m > n and when m = 0 != n.
    """
    if m < 0 or n < 0:
        raise ValueError("composition arguments must be nonnegative")
    if m > n or (m == 0 and n != 0):
        return 0
    return _binom0(n - 1, m - 1)


def count_topes_by_size(t: int, l: int) -> int:
    """Number of topes whose minimal decomposition has exactly l terms: 2*C(t,l)."""
    _check_dimension(t)
    if l % 2 == 0 or not 1 <= l <= t:
        raise ValueError(f"decomposition sizes are odd and in [1, {t}], got {l}")
    return 2 * math.comb(t, l)


def count_cycle_topes_by_negpart(t: int, j: int) -> int:
    """Number of size-1 decompositions with negative part of size j.

    The size-1 topes are exactly the 2t cycle vertices; walking the cycle
    shows each negative-part size 1..t-1 occurs twice and sizes 0 and t once.
    """
    _check_dimension(t)
    if not 0 <= j <= t:
        raise ValueError(f"negative-part size must lie in [0, {t}], got {j}")
    return 1 if j in (0, t) else 2


def count_by_negpart_and_size(t: int, j: int, l: int) -> int:
    """Number of topes with |T^-| = j and minimal decomposition size l >= 3.

    Zero outside the window (l-1)/2 <= j <= t-(l-1)/2.  Inside it, the count
    is given by several printed closed forms; all of them are evaluated and
    cross-checked here before the common value is returned.  The count is
    symmetric under j <-> t-j.
    """
    _check_dimension(t)
    if l % 2 == 0 or not 3 <= l <= t:
        raise ValueError(f"this count needs odd l in [3, {t}], got {l}")
    if not 0 <= j <= t:
        raise ValueError(f"negative-part size must lie in [0, {t}], got {j}")
    half = (l - 1) // 2
    if j < half or j > t - half:
        return 0
    values = _closed_form_values(t, j, l)
    if len(set(values)) != 1:
        raise CyclotopeError(f"closed forms disagree at t={t}, j={j}, l={l}: {values}")
    return values[0]


def _closed_form_values(t: int, j: int, l: int) -> tuple:
    """All printed closed forms for the (j, l) count, in display order."""
    h = (l - 1) // 2
    p = (l + 1) // 2
    c = composition_count
    by_compositions = 2 * c(p, j) * c(p, t - j) + c(p, j) * c(h, t - j) + c(h, j) * c(p, t - j)
    by_binomials = _binom0(j - 1, h) * _binom0(t - j, h) + _binom0(t - j - 1, h) * _binom0(j, h)
    by_shifted = c(p, j) * c(p, t - j + 1) + c(p, t - j) * c(p, j + 1)
    mirrored = 2 * c(p, t - j) * c(p, j) + c(p, t - j) * c(h, j) + c(h, t - j) * c(p, j)
    return by_compositions, by_binomials, by_shifted, mirrored


def count_by_boundary_class(t: int, l: int, case: str, j: Optional[int] = None) -> int:
    """Counts refined by how the negative part meets the boundary pair {1, t}.

    Topes with decomposition size l whose negative parts touch exactly the
    left boundary, exactly the right, both ends, or neither.  Without j the
    class totals are returned; with j the count is restricted to negative
    parts of size j (zero outside the class's j-window).
    """
    _check_dimension(t)
    if l % 2 == 0 or not 3 <= l <= t:
        raise ValueError(f"this count needs odd l in [3, {t}], got {l}")
    if case not in _CASES:
        raise ValueError(f"unknown case {case!r}, expected one of {_CASES}")
    if j is None:
        if case in ("left-only", "right-only"):
            return _binom0(t - 1, l)
        return _binom0(t - 1, l - 1)
    if not 0 <= j <= t:
        raise ValueError(f"negative-part size must lie in [0, {t}], got {j}")
    h = (l - 1) // 2
    p = (l + 1) // 2
    c = composition_count
    if case in ("left-only", "right-only"):
        return c(p, j) * c(p, t - j)
    if case == "both-ends":
        return c(p, j) * c(h, t - j)
    return c(h, j) * c(p, t - j)


def count_subsets_by_boundary(t: int, rho: int, boundary: int) -> int:
    """Number of subsets of the ground set with rho intervals and the given
    boundary overlap (how many of {1, t} they contain: 0, 1 or 2)."""
    _check_dimension(t)
    if boundary not in (0, 1, 2):
        raise ValueError(f"boundary overlap must be 0, 1 or 2, got {boundary}")
    if rho < 0:
        raise ValueError(f"interval count must be nonnegative, got {rho}")
    if rho == 0:
        # Only the empty set has zero intervals.
        return 1 if boundary == 0 else 0
    if boundary == 1:
        return 2 * _binom0(t - 1, 2 * rho - 1)
    if boundary == 2:
        return _binom0(t - 1, 2 * (rho - 1))
    return _binom0(t - 1, 2 * rho)


class CountTable:
    """Rows (j, l, count) sorted by (l, j), for one dimension t."""

    __slots__ = ("_t", "_rows")

    def __init__(self, t: int, rows: Iterable[tuple]):
        self._t = _check_dimension(t)
        rs = tuple((int(j), int(l), int(c)) for j, l, c in rows)
        if list(rs) != sorted(rs, key=lambda r: (r[1], r[0])):
            raise ValueError("rows must be sorted by (l, j)")
        for j, l, c in rs:
            if c < 0:
                raise ValueError(f"negative count at (j={j}, l={l})")
        self._rows = rs

    @property
    def t(self) -> int:
        return self._t

    @property
    def rows(self) -> tuple:
        return self._rows

    def total(self) -> int:
        return sum(c for _, _, c in self._rows)

    def count(self, j: int, l: int) -> int:
        for rj, rl, c in self._rows:
            if rj == j and rl == l:
                return c
        return 0

    def __iter__(self):
        return iter(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self._t == other._t and self._rows == other._rows


def formula_table(t: int) -> CountTable:
    """The full (j, l) count table from the closed forms alone."""
    _check_dimension(t)
    rows = []
    for j in range(t + 1):
        rows.append((j, 1, count_cycle_topes_by_negpart(t, j)))
    for l in range(3, t + 1, 2):
        half = (l - 1) // 2
        for j in range(half, t - half + 1):
            rows.append((j, l, count_by_negpart_and_size(t, j, l)))
    rows.sort(key=lambda r: (r[1], r[0]))
    return CountTable(t, rows)


def _worker_count(span: int) -> int:
    cap = os.environ.get("CYCLOTOPE_THREADS", "").strip()
    limit = int(cap) if cap else (os.cpu_count() or 1)
    limit = max(1, min(limit, 8))
    # Below ~2^18 masks per worker the threading overhead dominates.
    return max(1, min(limit, span >> 18))


def enumerate_statistics(t: int) -> CountTable:
    """Tally all 2^t topes by (negative-part size, decomposition size).

    Kernel-backed and shardable across threads; the worker count is capped
    by the CYCLOTOPE_THREADS environment variable.  Raises CapExceeded above
    the enumeration cap (default 20); use the formula path beyond it.
    """
    _check_dimension(t)
    if t > ENUMERATION_CAP:
        raise CapExceeded(
            f"enumeration over 2^{t} topes exceeds the cap of 2^{ENUMERATION_CAP}; "
            "use formula_table instead"
        )
    span = 1 << t
    workers = _worker_count(span)
    if workers == 1:
        counts = np.zeros((t + 1, t + 1), dtype=np.int64)
        backend.tally_negpart_size(t, 0, span, counts)
    else:
        step = (span + workers - 1) // workers
        shards = [np.zeros((t + 1, t + 1), dtype=np.int64) for _ in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(backend.tally_negpart_size, t, w * step, min((w + 1) * step, span), shards[w])
                for w in range(workers)
            ]
            for f in futures:
                f.result()
        counts = sum(shards)
    if int(counts.sum()) != span:
        raise CyclotopeError(f"tally lost topes: {int(counts.sum())} != 2^{t}")
    rows = [
        (j, l, int(counts[j, l]))
        for l in range(t + 1)
        for j in range(t + 1)
        if counts[j, l]
    ]
    rows.sort(key=lambda r: (r[1], r[0]))
    return CountTable(t, rows)
