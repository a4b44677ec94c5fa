"""Spectra and minimal decompositions of topes along the distinguished cycle.

Every tope T has a unique coordinate vector x with entries in {-1, 0, 1}
over the basis formed by the first t cycle vertices; the nonzero entries
pick out the unique inclusion-minimal set of cycle vertices summing to T.
The number of nonzero entries is always odd.

Three independent routes compute x:

* dense: the exact scaled-integer matrix-vector product with the inverse of
  the cycle-vertex matrix (reference path);
* fast: an O(t) telescoping form, x_1 = (T(1)+T(t))/2 and
  x_j = (T(j)-T(j-1))/2, derived from the rows of that inverse;
* intervals: structural dispatch on the maximal-interval decomposition of
  the negative part.

They are verified against each other exhaustively; see the test suite.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import backend
from .cycle import cycle_vertex, gram_entry, inverse_rows
from .errors import DimensionMismatch, InvalidSpectrum
from .topes import (
    GroundSubset,
    Tope,
    _check_dimension,
    interval_partition,
    negative_part,
)


class Spectrum:
    """Immutable coordinate vector of a tope over the cycle basis."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[int]):
        arr = np.asarray(coords, dtype=np.int8).copy()
        if arr.ndim != 1:
            raise ValueError("a spectrum is a one-dimensional vector")
        _check_dimension(arr.shape[0])
        if arr.size and int(np.abs(arr).max()) > 1:
            raise InvalidSpectrum("spectrum entries must lie in {-1, 0, 1}")
        arr.flags.writeable = False
        self._coords = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Spectrum":
        # Trusted constructor for arrays produced by the verified routes.
        self = object.__new__(cls)
        arr.flags.writeable = False
        self._coords = arr
        return self

    @classmethod
    def unit(cls, s: int, t: int) -> "Spectrum":
        """The standard unit vector sigma(s), 1-based."""
        _check_dimension(t)
        if not 1 <= s <= t:
            raise IndexError(f"coordinate {s} out of range [1, {t}]")
        coords = np.zeros(t, dtype=np.int8)
        coords[s - 1] = 1
        return cls._wrap(coords)

    @property
    def t(self) -> int:
        return self._coords.shape[0]

    @property
    def coords(self) -> np.ndarray:
        """Read-only int8 view (position k holds coordinate k+1)."""
        return self._coords

    @property
    def support_size(self) -> int:
        """Number of nonzero coordinates; the decomposition size."""
        return int(np.count_nonzero(self._coords))

    @property
    def total(self) -> int:
        return int(self._coords.sum(dtype=np.int64))

    def coord(self, i: int) -> int:
        if not 1 <= i <= self.t:
            raise IndexError(f"coordinate {i} out of range [1, {self.t}]")
        return int(self._coords[i - 1])

    def __neg__(self) -> "Spectrum":
        return Spectrum._wrap(-self._coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return bool(np.array_equal(self._coords, other._coords))

    def __hash__(self) -> int:
        return hash((self.t, self._coords.tobytes()))

    def __repr__(self) -> str:
        return f"Spectrum({self._coords.tolist()!r})"


class Decomposition:
    """The signed cycle vertices that sum to a tope.

    Terms are (sign, index) pairs with sign in {-1, +1} and index the 0-based
    position among the first t cycle vertices, kept in ascending index order.
    A term (sign, i) stands for the cycle vertex at position i when sign is
    +1, and for its antipode (position i + t) when sign is -1.
    """

    __slots__ = ("_t", "_terms")

    def __init__(self, t: int, terms: Iterable[tuple]):
        self._t = _check_dimension(t)
        ts = tuple((int(s), int(i)) for s, i in terms)
        if len(ts) % 2 == 0:
            raise ValueError("a decomposition has an odd number of terms")
        for s, i in ts:
            if s not in (-1, 1):
                raise ValueError(f"term sign must be +-1, got {s}")
            if not 0 <= i < self._t:
                raise ValueError(f"term index {i} out of range [0, {self._t})")
        if any(a[1] >= b[1] for a, b in zip(ts, ts[1:])):
            raise ValueError("terms must be in strictly ascending index order")
        self._terms = ts

    @property
    def t(self) -> int:
        return self._t

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def size(self) -> int:
        return len(self._terms)

    def vertex_indices(self) -> frozenset:
        """Positions on the full 2t-cycle: index i for +, index i+t for -."""
        return frozenset(i if s > 0 else i + self._t for s, i in self._terms)

    def vertex_sum(self) -> np.ndarray:
        """Entrywise sum of the signed cycle vertices, as int64."""
        acc = np.zeros(self._t, dtype=np.int64)
        for s, i in self._terms:
            acc += s * cycle_vertex(self._t, i).astype(np.int64)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._t == other._t and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"Decomposition(t={self._t}, terms={list(self._terms)!r})"


def spectrum_dense(T: Tope) -> Spectrum:
    """Coordinate vector via the exact scaled-integer matrix product.

    This is the reference route: it multiplies by the stored inverse matrix
    (scaled by 2) and halves, checking exactness.  Quadratic in t.
    """
    doubled = T.signs.astype(np.int64) @ inverse_rows(T.t).entries
    if np.any(doubled & 1):
        raise InvalidSpectrum("matrix product produced a non-integer coordinate")
    return Spectrum._wrap((doubled >> 1).astype(np.int8))


def spectrum_fast(T: Tope) -> Spectrum:
    """Coordinate vector via the O(t) telescoping form."""
    out = np.empty(T.t, dtype=np.int8)
    backend.spectrum_signs(T.signs, out)
    return Spectrum._wrap(out)


def spectrum_intervals(T: Tope) -> Spectrum:
    """Coordinate vector via the interval structure of the negative part.

    The negative part A of T is split into maximal intervals [i_k, j_k].
    Each interval contributes +1 just past its right end and -1 at its left
    end, dispatched on which boundary coordinates A touches: an interval
    ending at t drops its right term, the first left term is dropped only
    when A contains 1 but not t, and when A avoids both boundaries an extra
    +1 lands on coordinate 1.  The empty negative part gives sigma(1).
    """
    t = T.t
    A = negative_part(T)
    coords = np.zeros(t, dtype=np.int8)
    if not len(A):
        coords[0] = 1
        return Spectrum._wrap(coords)
    part = interval_partition(A)
    ivs = part.intervals
    left = 1 in A
    right = t in A
    if not (left or right):
        coords[0] += 1
    # +1 at j_k + 1 for each interval, except the one ending at t.
    for _, j in ivs if not right else ivs[:-1]:
        coords[j] += 1
    # -1 at i_k for each interval; the one starting at 1 is skipped only
    # when no interval ends at t (both-boundary topes keep the -sigma(1)).
    for i, _ in ivs[1:] if left and not right else ivs:
        coords[i - 1] -= 1
    return Spectrum._wrap(coords)


def decomposition_set(T: Tope) -> Decomposition:
    """The unique inclusion-minimal signed set of cycle vertices summing to T."""
    x = spectrum_fast(T)
    nz = np.flatnonzero(x.coords)
    return Decomposition(T.t, [(int(x.coords[i]), int(i)) for i in nz])


def decomposition_size(T: Tope) -> int:
    """Size of the minimal decomposition (odd), without building the terms."""
    return spectrum_fast(T).support_size


def spectrum_update(x1: Spectrum, T1: Tope, S: GroundSubset) -> Spectrum:
    """Spectrum of the reorientation of T1 on S, in O(|S|) from x1.

    Flipping coordinate s subtracts twice T1(s) times row s of the inverse
    matrix from the spectrum; each such row has at most two nonzero entries,
    so the update touches at most 2|S| coordinates.
    """
    if x1.t != T1.t:
        raise DimensionMismatch(f"dimension mismatch: {x1.t} vs {T1.t}")
    if T1.t != S.t:
        raise DimensionMismatch(f"dimension mismatch: {T1.t} vs {S.t}")
    t = T1.t
    coords = x1.coords.astype(np.int16)
    for s in S:
        v = T1.sign(s)
        if s < t:
            coords[s - 1] -= v
            coords[s] += v
        else:
            coords[0] -= v
            coords[t - 1] -= v
    if coords.size and int(np.abs(coords).max()) > 1:
        raise InvalidSpectrum("update left the coordinate range; x1 does not match T1")
    return Spectrum._wrap(coords.astype(np.int8))


def unit_flip_spectrum(s: int, t: int) -> Spectrum:
    """Spectrum of the tope obtained from all-plus by flipping coordinate s.

    Equals sigma(2) when s = 1, sigma(1) - sigma(s) + sigma(s+1) for interior
    s, and -sigma(t) when s = t.
    """
    _check_dimension(t)
    if not 1 <= s <= t:
        raise IndexError(f"coordinate {s} out of range [1, {t}]")
    coords = np.zeros(t, dtype=np.int8)
    if s == 1:
        coords[1] = 1
    elif s == t:
        coords[t - 1] = -1
    else:
        coords[0] = 1
        coords[s - 1] = -1
        coords[s] = 1
    return Spectrum._wrap(coords)


def spectrum_from_unit_flips(A: GroundSubset) -> Spectrum:
    """Spectrum of the reorientation of all-plus on A, as a sum of unit flips.

    Computes (1 - |A|) * sigma(1) plus the sum of the single-flip spectra
    over A.  Also equals the negated spectrum of the complement reorientation.
    """
    t = A.t
    acc = np.zeros(t, dtype=np.int64)
    acc[0] = 1 - len(A)
    for s in A:
        acc += unit_flip_spectrum(s, t).coords
    return Spectrum(acc)


def spectrum_from_boundary_cases(A: GroundSubset) -> Spectrum:
    """Spectrum of the reorientation of all-plus on A, by boundary case.

    Starts from a fixed head vector determined by which of the coordinates
    {1, t} lie in A, then subtracts sigma(i) - sigma(i+1) for every remaining
    element i of A.
    """
    t = A.t
    acc = np.zeros(t, dtype=np.int64)
    left = 1 in A
    right = t in A
    if left and right:
        acc[0] -= 1
        acc[1] += 1
        acc[t - 1] -= 1
        skip = (1, t)
    elif left:
        acc[1] += 1
        skip = (1,)
    elif right:
        acc[t - 1] -= 1
        skip = (t,)
    else:
        acc[0] += 1
        skip = ()
    for i in A:
        if i in skip:
            continue
        acc[i - 1] -= 1
        acc[i] += 1
    return Spectrum(acc)


def _half_inverse_transform(v: np.ndarray) -> np.ndarray:
    # v times twice the inverse matrix, in O(t): the columns telescope.
    out = np.empty(v.shape[0], dtype=np.int64)
    out[0] = v[0] + v[-1]
    out[1:] = v[1:] - v[:-1]
    return out


def size_difference(T1: Tope, T2: Tope) -> int:
    """|Q(T1)| - |Q(T2)| via one exact inner product, without either size.

    With u the restriction of T1 to the separation set, the difference of
    squared spectrum norms collapses to the inner product of the transforms
    of T1 - u and u under twice the inverse matrix.
    """
    if T1.t != T2.t:
        raise DimensionMismatch(f"dimension mismatch: {T1.t} vs {T2.t}")
    differs = T1.signs != T2.signs
    u = np.where(differs, T1.signs, 0).astype(np.int64)
    rest = T1.signs.astype(np.int64) - u
    return int(_half_inverse_transform(rest) @ _half_inverse_transform(u))


def negpart_size_from_spectrum(x: Spectrum) -> int:
    """|T^-| read off the spectrum alone.

    Equals t + 1 + sum_i x_i * i when the coordinate sum is -1, and
    -1 + sum_i x_i * i when it is +1.
    """
    total = x.total
    if total not in (-1, 1):
        raise InvalidSpectrum(f"tope spectra have coordinate sum +-1, got {total}")
    weighted = int(x.coords.astype(np.int64) @ np.arange(1, x.t + 1, dtype=np.int64))
    return (x.t + 1 + weighted) if total == -1 else (-1 + weighted)


def negpart_meet_join_from_spectra(x1: Spectrum, x2: Spectrum) -> tuple:
    """(|T1- intersect T2-|, |T1- union T2-|) from the two spectra alone.

    Uses the three-case quarter-integer formulas keyed on the coordinate
    sums, with the Gram pairing of the supports supplying the tope inner
    product.  Divisions are checked to be exact.
    """
    if x1.t != x2.t:
        raise DimensionMismatch(f"dimension mismatch: {x1.t} vs {x2.t}")
    s1, s2 = x1.total, x2.total
    if s1 not in (-1, 1) or s2 not in (-1, 1):
        raise InvalidSpectrum("tope spectra have coordinate sum +-1")
    t = x1.t
    sup1 = np.flatnonzero(x1.coords)
    sup2 = np.flatnonzero(x2.coords)
    g = 0
    for i in sup1:
        xi = int(x1.coords[i])
        for j in sup2:
            g += xi * int(x2.coords[j]) * gram_entry(t, int(i) + 1, int(j) + 1)
    idx = np.arange(1, t + 1, dtype=np.int64)
    w = int((x1.coords.astype(np.int64) + x2.coords.astype(np.int64)) @ idx)
    if s1 == -1 and s2 == -1:
        meet4 = 3 * t + 4 + g + 2 * w
        join4 = 5 * t + 4 - g + 2 * w
    elif s1 == 1 and s2 == 1:
        meet4 = -t - 4 + g + 2 * w
        join4 = t - 4 - g + 2 * w
    else:
        meet4 = t + g + 2 * w
        join4 = 3 * t - g + 2 * w
    if meet4 % 4 or join4 % 4:
        raise InvalidSpectrum("cardinality formulas did not divide exactly")
    return meet4 // 4, join4 // 4


def reconstruct_tope(x: Spectrum) -> Tope:
    """Invert the spectrum map: entry e is twice the prefix sum minus the total."""
    prefix = np.cumsum(x.coords.astype(np.int64))
    signs = 2 * prefix - x.total
    if int(np.abs(signs).max()) != 1 or int(np.abs(signs).min()) != 1:
        raise InvalidSpectrum("vector is not the spectrum of any tope")
    return Tope(signs.astype(np.int8))
