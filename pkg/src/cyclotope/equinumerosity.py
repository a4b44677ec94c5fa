"""Criteria deciding when two topes have equal-size minimal decompositions.

The reorientation of T on a subset A changes the decomposition size by a
quantity supported on the boundary of A: only adjacent coordinate pairs
split by A (and the wrap-around pair {1, t}) contribute.  This gives an
O(t) criterion with no spectra involved, an exact integer indicator for
arbitrary tope pairs, and a purely structural rule in terms of interval
counts when both topes are reorientations of the all-plus tope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cycle import inverse_gram_entry
from .decomposition import spectrum_fast
from .errors import DimensionMismatch, EmptySetError, NotProperSubset
from .topes import GroundSubset, Tope, interval_partition, reorient, separation_set


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the boundary-sum criterion.

    equal: whether the criterion declares the sizes equal.
    lhs_sum: the boundary sum over adjacent pairs split by A.
    rhs: the required value (T(1)*T(t) when A contains exactly one of {1, t},
        else 0).
    direct_equal: direct size comparison, when requested.
    """

    equal: bool
    lhs_sum: int
    rhs: int
    direct_equal: Optional[bool] = None


def equal_size_criterion(T: Tope, A: GroundSubset, include_direct: bool = False) -> CriterionReport:
    """Decide |Q(T)| = |Q(reorient(T, A))| from the boundary of A alone.

    Sums T(i)*T(i+1) over the positions i where exactly one of {i, i+1}
    lies in A.  The sizes agree exactly when this sum equals T(1)*T(t) if A
    contains exactly one boundary coordinate, and 0 otherwise.  A must be a
    proper subset; for the full set the sizes agree trivially (antipodes).
    """
    if T.t != A.t:
        raise DimensionMismatch(f"dimension mismatch: {T.t} vs {A.t}")
    t = T.t
    if len(A) == t:
        raise NotProperSubset("the criterion is stated for proper subsets only")
    inside = set(A)
    lhs = 0
    for i in range(1, t):
        if (i in inside) != (i + 1 in inside):
            lhs += T.sign(i) * T.sign(i + 1)
    rhs = T.sign(1) * T.sign(t) if A.boundary_count == 1 else 0
    direct = None
    if include_direct:
        direct = spectrum_fast(T).support_size == spectrum_fast(reorient(T, A)).support_size
    return CriterionReport(equal=(lhs == rhs), lhs_sum=lhs, rhs=rhs, direct_equal=direct)


def equinumerosity_indicator(T1: Tope, T2: Tope) -> int:
    """Exact integer that vanishes iff the two decomposition sizes agree.

    Four times the sum of T1(i)*T1(j) times the inverse Gram pairing over
    unordered pairs {i, j} split by the separation set.  Only adjacent pairs
    and the (1, t) pair can contribute, so the sum is O(t).
    """
    if T1.t != T2.t:
        raise DimensionMismatch(f"dimension mismatch: {T1.t} vs {T2.t}")
    t = T1.t
    split = set(separation_set(T1, T2))
    acc = 0
    for i in range(1, t):
        if (i in split) != (i + 1 in split):
            acc += T1.sign(i) * T1.sign(i + 1) * inverse_gram_entry(t, i, i + 1)
    if (1 in split) != (t in split):
        acc += T1.sign(1) * T1.sign(t) * inverse_gram_entry(t, 1, t)
    return acc


def equal_size_by_interval_count(A: GroundSubset, B: GroundSubset) -> bool:
    """Structural equal-size rule for reorientations of the all-plus tope.

    When A and B agree on whether they touch the boundary pair {1, t}, the
    sizes agree iff their interval counts agree; when exactly one touches,
    the toucher needs one more interval than the other.
    """
    if A.t != B.t:
        raise DimensionMismatch(f"dimension mismatch: {A.t} vs {B.t}")
    if not len(A) or not len(B):
        raise EmptySetError("both subsets must be nonempty")
    rho_a = interval_partition(A).rho
    rho_b = interval_partition(B).rho
    touch_a = A.boundary_count > 0
    touch_b = B.boundary_count > 0
    if touch_a == touch_b:
        return rho_b == rho_a
    if touch_a:
        return rho_b == rho_a - 1
    return rho_a == rho_b - 1
