"""The distinguished symmetric cycle of H(t,2) and its exact matrices.

The cycle visits 2t vertices: the all-plus tope, then the topes obtained by
flipping the first s coordinates for s = 1..t-1, then the antipodes of all of
those in the same order.  Consecutive vertices differ in exactly one
coordinate, and vertex k+t is the negation of vertex k.

The first t vertices form an invertible t x t sign matrix.  Everything here
is kept in scaled-integer form: a matrix with denominator d stores d times
the rational matrix it represents, so all identities can be checked
bit-exactly.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .topes import Tope, _check_dimension


class ScaledIntMatrix:
    """An exact rational matrix stored as integer entries over a fixed denominator."""

    __slots__ = ("_entries", "_denom")

    def __init__(self, entries, denom: int = 1):
        arr = np.asarray(entries, dtype=np.int64).copy()
        if arr.ndim != 2:
            raise ValueError("entries must be a 2-D array")
        if denom not in (1, 2, 4):
            raise ValueError(f"denominator must be 1, 2 or 4, got {denom}")
        arr.flags.writeable = False
        self._entries = arr
        self._denom = int(denom)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def denom(self) -> int:
        return self._denom

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    def __matmul__(self, other: "ScaledIntMatrix") -> "ScaledIntMatrix":
        if not isinstance(other, ScaledIntMatrix):
            return NotImplemented
        product = self._entries @ other._entries
        d = self._denom * other._denom
        # Reduce the scale when the product allows it, so identities like
        # M * M^{-1} come out with the smallest exact denominator.
        while d > 1 and not np.any(product % 2):
            product = product // 2
            d //= 2
        if d not in (1, 2, 4):
            raise ValueError(f"product denominator {d} is not representable")
        return ScaledIntMatrix(product, d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScaledIntMatrix):
            return NotImplemented
        return self._denom == other._denom and bool(np.array_equal(self._entries, other._entries))

    def __repr__(self) -> str:
        return f"ScaledIntMatrix(shape={self._entries.shape}, denom={self._denom})"


class SymmetricCycle:
    """The ordered 2t vertices of the distinguished symmetric cycle."""

    __slots__ = ("_t", "_vertices")

    def __init__(self, t: int):
        self._t = _check_dimension(t)
        self._vertices = tuple(Tope._wrap(_vertex_signs(self._t, k)) for k in range(2 * self._t))

    @property
    def t(self) -> int:
        return self._t

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def vertex(self, k: int) -> Tope:
        """Cycle vertex at position k, 0 <= k < 2t."""
        if not 0 <= k < 2 * self._t:
            raise IndexError(f"cycle position {k} out of range [0, {2 * self._t})")
        return self._vertices[k]

    def __len__(self) -> int:
        return 2 * self._t

    def __iter__(self):
        return iter(self._vertices)


def _vertex_signs(t: int, k: int) -> np.ndarray:
    # Vertex k for k < t flips the first k coordinates of the all-plus tope;
    # vertex k+t is its antipode.
    signs = np.ones(t, dtype=np.int8)
    base = k % t
    signs[:base] = -1
    return signs if k < t else -signs


def cycle_vertex(t: int, k: int) -> np.ndarray:
    """Sign vector of cycle vertex k without materializing the whole cycle."""
    _check_dimension(t)
    if not 0 <= k < 2 * t:
        raise IndexError(f"cycle position {k} out of range [0, {2 * t})")
    return _vertex_signs(t, k)


def build_cycle(t: int) -> SymmetricCycle:
    """Construct the distinguished symmetric cycle for dimension t."""
    return SymmetricCycle(t)


@lru_cache(maxsize=4)
def _matrix_entries(t: int) -> np.ndarray:
    rows = np.vstack([_vertex_signs(t, k) for k in range(t)]).astype(np.int64)
    rows.flags.writeable = False
    return rows


@lru_cache(maxsize=4)
def _inverse_entries(t: int) -> np.ndarray:
    # Twice the inverse of the vertex matrix: row i (0-based, i < t-1) is
    # sigma(i+1) - sigma(i+2); the last row is sigma(1) + sigma(t).
    out = np.zeros((t, t), dtype=np.int64)
    idx = np.arange(t - 1)
    out[idx, idx] = 1
    out[idx, idx + 1] = -1
    out[t - 1, 0] = 1
    out[t - 1, t - 1] = 1
    out.flags.writeable = False
    return out


def tope_matrix(t: int) -> ScaledIntMatrix:
    """The t x t matrix whose rows are the first t cycle vertices."""
    _check_dimension(t)
    return ScaledIntMatrix(_matrix_entries(t), denom=1)


def inverse_rows(t: int) -> ScaledIntMatrix:
    """The exact inverse of :func:`tope_matrix`, scaled by 2 (denominator 2)."""
    _check_dimension(t)
    return ScaledIntMatrix(_inverse_entries(t), denom=2)


def gram_entry(t: int, i: int, j: int) -> int:
    """Entry (i, j) of the Gram matrix of the first t cycle vertices.

    The matrix is symmetric Toeplitz with value t - 2|j - i|.
    """
    _check_dimension(t)
    if not (1 <= i <= t and 1 <= j <= t):
        raise IndexError(f"indices ({i}, {j}) out of range [1, {t}]")
    return t - 2 * abs(j - i)


def inverse_gram_entry(t: int, i: int, j: int) -> int:
    """Four times entry (i, j) of the inverse Gram matrix (denominator 4).

    Computed from the inverse rows rather than transcribed: the value is 2 on
    the diagonal, -1 for |i - j| = 1, +1 on the (1, t) corner pair, else 0.
    """
    _check_dimension(t)
    if not (1 <= i <= t and 1 <= j <= t):
        raise IndexError(f"indices ({i}, {j}) out of range [1, {t}]")
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    if {i, j} == {1, t}:
        return 1
    return 0


def inverse_gram_matrix(t: int) -> ScaledIntMatrix:
    """The full inverse Gram matrix, scaled by 4 (denominator 4)."""
    _check_dimension(t)
    half = _inverse_entries(t)
    return ScaledIntMatrix(half @ half.T, denom=4)
