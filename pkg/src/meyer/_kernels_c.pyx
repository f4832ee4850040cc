# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels on 64-bit words.

Same algorithms, same pivot rules and same outputs as ``_kernels_py``.  Every
multiply/add is overflow-checked; on overflow an ``OverflowError`` is raised
and the caller falls back to the pure-Python (bignum) path.  Inputs whose
magnitude reaches 2**62 are rejected up front for the same reason.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    #include <limits.h>
    /* LLONG_MIN counts as overflow so that negation is always safe. */
    static inline int mm_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int mm_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int mm_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r) || *r == LLONG_MIN;
    }
    """
    int mm_mul(long long a, long long b, long long *r) nogil
    int mm_sub(long long a, long long b, long long *r) nogil
    int mm_add(long long a, long long b, long long *r) nogil

cdef long long LIMIT = 1LL << 62


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


cdef inline long long _gcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef long long *_load(object rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef long long *buf = <long long *> malloc((nrows * ncols + 1) * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef object x
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j in range(ncols):
                x = row[j]
                if x >= LIMIT or x <= -LIMIT:
                    raise OverflowError("entry exceeds 62 bits")
                buf[i * ncols + j] = x
    except BaseException:
        free(buf)
        raise
    return buf


cdef int _row_content(long long *row, Py_ssize_t n) nogil:
    cdef long long c = 0
    cdef Py_ssize_t j
    for j in range(n):
        if row[j]:
            c = _gcd(c, row[j])
            if c == 1:
                return 0
    if c > 1:
        for j in range(n):
            row[j] //= c
    return 0


cdef int _rref(long long *m, Py_ssize_t nrows, Py_ssize_t ncols,
               Py_ssize_t *pivots, Py_ssize_t *rank) nogil:
    # Returns 1 on overflow.
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef long long best_abs, a, p, h, sp, sa, t1, t2
    cdef long long *prow
    cdef long long *row
    for i in range(nrows):
        _row_content(m + i * ncols, ncols)
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            a = m[i * ncols + c]
            if a:
                a = _abs(a)
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != r:
            for j in range(ncols):
                t1 = m[r * ncols + j]
                m[r * ncols + j] = m[best * ncols + j]
                m[best * ncols + j] = t1
        prow = m + r * ncols
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m + i * ncols
            a = row[c]
            if not a:
                continue
            h = _gcd(a, p)
            sp = p // h
            sa = a // h
            for j in range(ncols):
                if mm_mul(sp, row[j], &t1) or mm_mul(sa, prow[j], &t2):
                    return 1
                if mm_sub(t1, t2, &row[j]):
                    return 1
            _row_content(row, ncols)
        pivots[r] = c
        r += 1
    rank[0] = r
    return 0


def rref_int(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows), rank = 0, k, j
    cdef long long *m = _load(rows, nrows, ncols)
    cdef Py_ssize_t *pivots = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef int overflow
    try:
        overflow = _rref(m, nrows, ncols, pivots, &rank)
        if overflow:
            raise OverflowError("rref_int overflow")
        return ([pivots[k] for k in range(rank)],
                [[m[k * ncols + j] for j in range(ncols)] for k in range(rank)])
    finally:
        free(m)
        free(pivots)


def kernel_int(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows), rank = 0, k, f, c, j
    cdef long long *m = _load(rows, nrows, ncols)
    cdef Py_ssize_t *pivots = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef char *is_pivot = <char *> malloc(ncols + 1)
    cdef long long *v = <long long *> malloc((ncols + 1) * sizeof(long long))
    cdef long long scale, a, p, d, t
    cdef list basis = []
    try:
        if _rref(m, nrows, ncols, pivots, &rank):
            raise OverflowError("kernel_int overflow")
        for j in range(ncols):
            is_pivot[j] = 0
        for k in range(rank):
            is_pivot[pivots[k]] = 1
        for f in range(ncols):
            if is_pivot[f]:
                continue
            scale = 1
            for k in range(rank):
                a = m[k * ncols + f]
                if a:
                    p = m[k * ncols + pivots[k]]
                    d = p // _gcd(p, a)
                    if mm_mul(scale // _gcd(scale, d), d, &scale):
                        raise OverflowError("kernel_int overflow")
            for j in range(ncols):
                v[j] = 0
            v[f] = scale
            for k in range(rank):
                a = m[k * ncols + f]
                if a:
                    c = pivots[k]
                    p = m[k * ncols + c]
                    d = _gcd(p, a)
                    if mm_mul(scale // (p // d), a // d, &t):
                        raise OverflowError("kernel_int overflow")
                    v[c] = -t
            _row_content(v, ncols)
            basis.append([v[j] for j in range(ncols)])
        return basis
    finally:
        free(m)
        free(pivots)
        free(is_pivot)
        free(v)


cdef int _reduce_block(long long *g, Py_ssize_t n) nogil:
    cdef long long c = 0
    cdef Py_ssize_t i
    for i in range(n * n):
        if g[i]:
            c = _gcd(c, g[i])
            if c == 1:
                return 0
    if c > 1:
        for i in range(n * n):
            g[i] //= c
    return 0


cdef int _inertia(long long *g, long long *tmp, Py_ssize_t n,
                  Py_ssize_t *pos, Py_ssize_t *neg) nogil:
    # g and tmp are n*n work buffers; the active block is kept compacted at
    # the front of g with row stride equal to the current size.
    cdef Py_ssize_t k, i, j, ii, jj, i0, j0, m, found
    cdef long long best, d, p, ap, sgn, a_i, a_j, t1, t2, b, ab, ur, vr, us, vs
    cdef long long *swap
    while n > 0:
        k = -1
        best = 0
        for i in range(n):
            d = g[i * n + i]
            if d and (k < 0 or _abs(d) < best):
                k = i
                best = _abs(d)
                if best == 1:
                    break
        if k >= 0:
            p = g[k * n + k]
            if p > 0:
                pos[0] += 1
                sgn = 1
            else:
                neg[0] += 1
                sgn = -1
            ap = _abs(p)
            m = n - 1
            ii = 0
            for i in range(n):
                if i == k:
                    continue
                a_i = g[i * n + k] * sgn
                jj = 0
                for j in range(n):
                    if j == k:
                        continue
                    a_j = g[k * n + j]
                    if mm_mul(ap, g[i * n + j], &t1) or mm_mul(a_i, a_j, &t2):
                        return 1
                    if mm_sub(t1, t2, &tmp[ii * m + jj]):
                        return 1
                    jj += 1
                ii += 1
            swap = g
            g = tmp
            tmp = swap
            n = m
            _reduce_block(g, n)
            continue
        found = 0
        i0 = 0
        j0 = 0
        for i in range(n):
            for j in range(i + 1, n):
                if g[i * n + j]:
                    i0 = i
                    j0 = j
                    found = 1
                    break
            if found:
                break
        if not found:
            break
        b = g[i0 * n + j0]
        pos[0] += 1
        neg[0] += 1
        sgn = 1 if b > 0 else -1
        ab = _abs(b)
        m = n - 2
        ii = 0
        for i in range(n):
            if i == i0 or i == j0:
                continue
            ur = g[i * n + i0]
            vr = g[i * n + j0]
            jj = 0
            for j in range(n):
                if j == i0 or j == j0:
                    continue
                us = g[j * n + i0]
                vs = g[j * n + j0]
                if mm_mul(ur, vs, &t1) or mm_mul(vr, us, &t2):
                    return 1
                if mm_add(t1, t2, &t1) or mm_mul(sgn, t1, &t1):
                    return 1
                if mm_mul(ab, g[i * n + j], &t2):
                    return 1
                if mm_sub(t2, t1, &tmp[ii * m + jj]):
                    return 1
                jj += 1
            ii += 1
        swap = g
        g = tmp
        tmp = swap
        n = m
        _reduce_block(g, n)
    return 0


def inertia_int(gram):
    cdef Py_ssize_t n = len(gram), pos = 0, neg = 0
    cdef long long *g = _load(gram, n, n)
    cdef long long *tmp = <long long *> malloc((n * n + 1) * sizeof(long long))
    try:
        if _inertia(g, tmp, n, &pos, &neg):
            raise OverflowError("inertia_int overflow")
        return pos, neg, n - pos - neg
    finally:
        free(g)
        free(tmp)


def matmul_int(a, b):
    cdef Py_ssize_t n = len(a), k = len(b), m, i, j, l
    if k == 0:
        return [[] for _ in range(n)]
    m = len(b[0])
    cdef long long *x = _load(a, n, k)
    cdef long long *y
    cdef long long s, t
    try:
        y = _load(b, k, m)
    except BaseException:
        free(x)
        raise
    cdef list out = []
    cdef list row
    try:
        for i in range(n):
            row = []
            for j in range(m):
                s = 0
                for l in range(k):
                    if mm_mul(x[i * k + l], y[l * m + j], &t) or mm_add(s, t, &s):
                        raise OverflowError("matmul_int overflow")
                row.append(s)
            out.append(row)
        return out
    finally:
        free(x)
        free(y)
