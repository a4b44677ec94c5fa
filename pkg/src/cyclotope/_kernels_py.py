"""Pure-Python (numpy) twins of the compiled kernels.

Same contracts as cyclotope._kernels; used when the extension is not built
or when CYCLOTOPE_BACKEND=python forces them.
"""

import numpy as np

_BLOCK = 1 << 20


def spectrum_signs(signs, out):
    """Fill out[0] = (signs[0]+signs[t-1])/2 and out[j] = (signs[j]-signs[j-1])/2."""
    t = signs.shape[0]
    if out.shape[0] != t:
        raise ValueError("output buffer has wrong length")
    np.subtract(signs[1:], signs[:-1], out=out[1:])
    first = int(signs[0]) + int(signs[t - 1])
    # Differences of +-1 entries are even; anything else is corrupt input.
    if (first & 1) or (out[1:] & 1).any():
        raise ValueError("sign entries must be exactly +1 or -1")
    out[0] = first >> 1
    out[1:] >>= 1


def tally_negpart_size(t, start, stop, out):
    """Tally packed topes in [start, stop) into out[j, l]."""
    if t < 3 or t > 62:
        raise ValueError("tally kernel supports 3 <= t <= 62")
    if out.shape[0] < t + 1 or out.shape[1] < t + 1:
        raise ValueError("tally buffer too small")
    width = out.shape[1]
    low = np.uint64((1 << (t - 1)) - 1)
    shift1 = np.uint64(1)
    shiftt = np.uint64(t - 1)
    flat = out.reshape(-1)
    pos = int(start)
    while pos < stop:
        hi = min(pos + _BLOCK, int(stop))
        m = np.arange(pos, hi, dtype=np.uint64)
        j = np.bitwise_count(m).astype(np.int64)
        l = np.bitwise_count((m ^ (m >> shift1)) & low).astype(np.int64)
        l += ((m ^ (m >> shiftt)) & shift1) == 0
        counts = np.bincount(j * width + l, minlength=out.size)
        flat += counts
        pos = hi
