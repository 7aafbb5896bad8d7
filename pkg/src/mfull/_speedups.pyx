# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernels over F_p on dense int64 matrices.

Semantics mirror mfull._kernels_py exactly; p is assumed < 2^31 so products
of residues fit in 64 bits.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef long long* _load(rows, Py_ssize_t m, Py_ssize_t n, long long p) except NULL:
    cdef long long* buf = <long long*> malloc(m * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long v
    for i in range(m):
        row = rows[i]
        for j in range(n):
            v = row[j]
            v %= p
            if v < 0:
                v += p
            buf[i * n + j] = v
    return buf


def rank_mod_p(rows, long long p):
    """Rank of a dense matrix given as a list of equal-length int rows."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(rows[0])
    cdef long long* a = _load(rows, m, n, p)
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef long long inv, f, v
    try:
        for col in range(n):
            piv = -1
            for r in range(rank, m):
                if a[r * n + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, n):
                    v = a[rank * n + j]
                    a[rank * n + j] = a[piv * n + j]
                    a[piv * n + j] = v
            inv = _inv_mod(a[rank * n + col], p)
            for r in range(rank + 1, m):
                if a[r * n + col] != 0:
                    f = a[r * n + col] * inv % p
                    for j in range(col, n):
                        v = (a[r * n + j] - f * a[rank * n + j]) % p
                        if v < 0:
                            v += p
                        a[r * n + j] = v
            rank += 1
            if rank == m:
                break
        return rank
    finally:
        free(a)


def rref_mod_p(rows, long long p):
    """Reduced row echelon form mod p: (rank, pivot columns, reduced rows)."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0, [], []
    cdef Py_ssize_t n = len(rows[0])
    cdef long long* a = _load(rows, m, n, p)
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef long long inv, f, v
    pivots = []
    try:
        for col in range(n):
            piv = -1
            for r in range(rank, m):
                if a[r * n + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, n):
                    v = a[rank * n + j]
                    a[rank * n + j] = a[piv * n + j]
                    a[piv * n + j] = v
            inv = _inv_mod(a[rank * n + col], p)
            if inv != 1:
                for j in range(col, n):
                    a[rank * n + j] = a[rank * n + j] * inv % p
            for r in range(m):
                if r != rank and a[r * n + col] != 0:
                    f = a[r * n + col]
                    for j in range(col, n):
                        v = (a[r * n + j] - f * a[rank * n + j]) % p
                        if v < 0:
                            v += p
                        a[r * n + j] = v
            pivots.append(col)
            rank += 1
            if rank == m:
                break
        out = [[a[r * n + j] for j in range(n)] for r in range(rank)]
        return rank, pivots, out
    finally:
        free(a)
