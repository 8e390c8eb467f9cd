# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled counting kernels over C-contiguous int32 Cayley tables."""

BACKEND = "cython"


def count_commuting_pairs(const int[:, ::1] mult):
    """Number of ordered pairs (x, y) with mult[x][y] == mult[y][x]."""
    cdef Py_ssize_t n = mult.shape[0]
    cdef Py_ssize_t x, y
    cdef long long total = n
    for x in range(n):
        for y in range(x + 1, n):
            if mult[x, y] == mult[y, x]:
                total += 2
    return total


def count_commuting_pairs_mn(const int[:, ::1] mult, const int[::1] pm, const int[::1] pn):
    """Number of ordered pairs (x, y) with pm[x] and pn[y] commuting."""
    cdef Py_ssize_t n = mult.shape[0]
    cdef Py_ssize_t x, y
    cdef int u, v
    cdef long long total = 0
    for x in range(n):
        u = pm[x]
        for y in range(n):
            v = pn[y]
            if mult[u, v] == mult[v, u]:
                total += 1
    return total


def centralizer_sizes(const int[:, ::1] mult):
    """List of |Z(g, G)| for every element g."""
    cdef Py_ssize_t n = mult.shape[0]
    cdef Py_ssize_t g, h
    cdef long long c
    sizes = []
    for g in range(n):
        c = 0
        for h in range(n):
            if mult[g, h] == mult[h, g]:
                c += 1
        sizes.append(c)
    return sizes
