# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled utility-matrix kernel over bitmask words and scaled weights.

Mirrors kernel_py.utility_matrix but on fixed-width integers; callers must
check the encoding's int64_safe flag first.
"""

from libc.stdint cimport int64_t, uint64_t


cdef extern from *:
    """
    static inline int sc_popcount64(unsigned long long x)
    { return __builtin_popcountll(x); }
    static inline int sc_ctz64(unsigned long long x)
    { return __builtin_ctzll(x); }
    """
    int sc_popcount64(unsigned long long x) nogil
    int sc_ctz64(unsigned long long x) nogil


def utility_matrix(uint64_t[:, ::1] offers not None,
                   uint64_t[:, ::1] supports not None,
                   int64_t[:, ::1] weights not None,
                   int64_t[::1] totals not None,
                   int measure,
                   int64_t[:, ::1] num_out not None,
                   int64_t[::1] den_out not None):
    """Fill num_out (N x M) and den_out (N) for the selected measure.

    measure: 0 = cardinal, 1 = normalized, 2 = fuzzy.
    offers/supports are little-endian 64-bit mask words, one row per
    alternative/individual; weights holds each individual's scaled
    membership numerators over universe positions.
    """
    cdef Py_ssize_t M = offers.shape[0]
    cdef Py_ssize_t W = offers.shape[1]
    cdef Py_ssize_t N = supports.shape[0]
    cdef Py_ssize_t n, m, w
    cdef int64_t acc
    cdef int count
    cdef uint64_t bits

    if supports.shape[1] != W or num_out.shape[0] != N or num_out.shape[1] != M:
        raise ValueError("kernel buffer shapes disagree")
    if den_out.shape[0] != N or totals.shape[0] != N or weights.shape[0] != N:
        raise ValueError("kernel buffer shapes disagree")

    with nogil:
        for n in range(N):
            if measure == 0:
                den_out[n] = 1
            elif measure == 1:
                count = 0
                for w in range(W):
                    count += sc_popcount64(supports[n, w])
                den_out[n] = count
            else:
                den_out[n] = totals[n]

            for m in range(M):
                if measure <= 1:
                    count = 0
                    for w in range(W):
                        count += sc_popcount64(supports[n, w] & offers[m, w])
                    num_out[n, m] = count
                else:
                    acc = 0
                    for w in range(W):
                        bits = offers[m, w]
                        while bits != 0:
                            acc += weights[n, w * 64 + sc_ctz64(bits)]
                            bits &= bits - 1
                    num_out[n, m] = acc
