# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot paths.

spectrum_signs: the O(t) coordinate transform of a single sign vector.
tally_negpart_size: exhaustive (negative-part size, decomposition size)
tallies over a contiguous range of packed topes.  Both release the GIL so
callers may shard work across threads.
"""

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define CT_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int CT_POPCOUNT64(unsigned long long x)
    {
        int n = 0;
        while (x) { x &= x - 1; n++; }
        return n;
    }
    #endif
    """
    int CT_POPCOUNT64(unsigned long long x) nogil


def spectrum_signs(const signed char[::1] signs, signed char[::1] out):
    """Fill out[0] = (signs[0]+signs[t-1])/2 and out[j] = (signs[j]-signs[j-1])/2.

    Every intermediate must be even; an odd one means the input was not a
    +-1 vector and is reported as a hard error.
    """
    cdef Py_ssize_t t = signs.shape[0]
    cdef Py_ssize_t j
    cdef int d, bad = 0
    if out.shape[0] != t:
        raise ValueError("output buffer has wrong length")
    with nogil:
        d = signs[0] + signs[t - 1]
        bad |= d & 1
        out[0] = <signed char> (d / 2)
        for j in range(1, t):
            d = signs[j] - signs[j - 1]
            bad |= d & 1
            out[j] = <signed char> (d / 2)
    if bad:
        raise ValueError("sign entries must be exactly +1 or -1")


def tally_negpart_size(int t, unsigned long long start, unsigned long long stop,
                       long long[:, ::1] out):
    """Tally packed topes in [start, stop) into out[j, l].

    Bit e-1 of a mask set means coordinate e is -1.  j is the popcount; l is
    the number of adjacent sign changes plus one when the first and last
    coordinates agree.
    """
    cdef unsigned long long m, low
    cdef int j, l
    if t < 3 or t > 62:
        raise ValueError("tally kernel supports 3 <= t <= 62")
    if out.shape[0] < t + 1 or out.shape[1] < t + 1:
        raise ValueError("tally buffer too small")
    low = ((<unsigned long long> 1) << (t - 1)) - 1
    with nogil:
        for m in range(start, stop):
            j = CT_POPCOUNT64(m)
            l = CT_POPCOUNT64((m ^ (m >> 1)) & low)
            if ((m ^ (m >> (t - 1))) & 1) == 0:
                l += 1
            out[j, l] += 1
