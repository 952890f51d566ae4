# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 64-bit integer paths with overflow detection.

Every routine either returns the exact answer or signals overflow, in which
case the caller falls back to the arbitrary-precision Python kernel. There is
no silent wraparound.
"""

from libc.stdlib cimport malloc, free

from . import _kernels_py

cdef extern from *:
    """
    static inline int jk_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int jk_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int jk_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int jk_mul(long long a, long long b, long long *r) nogil
    int jk_add(long long a, long long b, long long *r) nogil
    int jk_sub(long long a, long long b, long long *r) nogil

DEF LIMIT = 4611686018427387904  # 2**62


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


cdef int _rank_c(long long *m, int nrows, int ncols) nogil:
    """Fraction-free elimination in place; returns rank or -1 on overflow."""
    cdef int rank = 0, col, i, j, piv
    cdef long long pv, a, g, m1, m2, best, v, t1, t2, content
    cdef long long *p
    cdef long long *r
    for col in range(ncols):
        piv = -1
        best = 0
        for i in range(rank, nrows):
            v = m[i * ncols + col]
            if v != 0 and (piv < 0 or _abs(v) < best):
                piv = i
                best = _abs(v)
                if best == 1:
                    break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                v = m[rank * ncols + j]
                m[rank * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = v
        p = m + rank * ncols
        pv = p[col]
        for i in range(rank + 1, nrows):
            r = m + i * ncols
            a = r[col]
            if a == 0:
                continue
            g = _gcd(pv, a)
            m1 = pv // g
            m2 = a // g
            content = 0
            for j in range(col, ncols):
                if jk_mul(r[j], m1, &t1) or jk_mul(p[j], m2, &t2) or jk_sub(t1, t2, &v):
                    return -1
                r[j] = v
                if v != 0:
                    content = _gcd(content, v)
            if content > 1:
                for j in range(col, ncols):
                    r[j] = r[j] // content
        rank += 1
        if rank == nrows:
            break
    return rank


def integer_rank(rows):
    """Rank over Q of an integer matrix; exact for any input size."""
    cdef list work = [r for r in rows if any(r)]
    cdef int nrows = len(work), ncols, i, j, rank
    cdef long long *m
    if nrows == 0:
        return 0
    ncols = len(work[0])
    for r in work:
        for v in r:
            if v >= LIMIT or v <= -LIMIT:
                return _kernels_py.integer_rank(work)
    m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = work[i]
            for j in range(ncols):
                m[i * ncols + j] = row[j]
        with nogil:
            rank = _rank_c(m, nrows, ncols)
    finally:
        free(m)
    if rank < 0:
        return _kernels_py.integer_rank(work)
    return rank


cdef inline bint _check(long long ld, long long d2, long long *cons, int ncons, bint *overflow) nogil:
    cdef int k
    cdef long long v, t
    for k in range(ncons):
        v = cons[5 * k]
        if jk_mul(cons[5 * k + 1], ld, &t) or jk_add(v, t, &v):
            overflow[0] = True
            return False
        if jk_mul(cons[5 * k + 2], d2, &t) or jk_add(v, t, &v):
            overflow[0] = True
            return False
        if cons[5 * k + 3] != 0:
            if jk_mul(ld, ld, &t) or jk_mul(cons[5 * k + 3], t, &t) or jk_add(v, t, &v):
                overflow[0] = True
                return False
        if v < 0 or (cons[5 * k + 4] and v == 0):
            return False
    return True


def scan_box(gram, lc, bounds, constraints):
    """Same contract as :func:`jetample._kernels_py.scan_box`.

    The caller guarantees magnitudes fit; any overflow discovered here
    restarts the whole scan on the Python path.
    """
    cdef int n = len(bounds), ncons = len(constraints), i, j, k
    cdef long long *g
    cdef long long *lcv
    cdef long long *bnd
    cdef long long *a
    cdef long long *ga
    cdef long long *cons
    cdef long long ld = 0, d2 = 0, b
    cdef bint overflow = False
    cdef list out = []
    if n == 0:
        return []
    for row in gram:
        for v in row:
            if v >= LIMIT or v <= -LIMIT:
                return _kernels_py.scan_box(gram, lc, bounds, constraints)
    for seq in (lc, bounds):
        for v in seq:
            if v >= LIMIT or v <= -LIMIT:
                return _kernels_py.scan_box(gram, lc, bounds, constraints)
    for c in constraints:
        for v in c[:4]:
            if v >= LIMIT or v <= -LIMIT:
                return _kernels_py.scan_box(gram, lc, bounds, constraints)
    g = <long long *> malloc(n * n * sizeof(long long))
    lcv = <long long *> malloc(n * sizeof(long long))
    bnd = <long long *> malloc(n * sizeof(long long))
    a = <long long *> malloc(n * sizeof(long long))
    ga = <long long *> malloc(n * sizeof(long long))
    cons = <long long *> malloc((5 * ncons + 1) * sizeof(long long))
    if not (g and lcv and bnd and a and ga and cons):
        free(g); free(lcv); free(bnd); free(a); free(ga); free(cons)
        raise MemoryError()
    try:
        for i in range(n):
            lcv[i] = lc[i]
            bnd[i] = bounds[i]
            a[i] = 0
            ga[i] = 0
            for j in range(n):
                g[i * n + j] = gram[i][j]
        for k in range(ncons):
            c = constraints[k]
            for j in range(4):
                cons[5 * k + j] = c[j]
            cons[5 * k + 4] = 1 if c[4] else 0
        while True:
            i = n - 1
            while i >= 0 and a[i] == bnd[i]:
                b = a[i]
                if b:
                    d2 += -2 * b * ga[i] + b * b * g[i * n + i]
                    ld -= b * lcv[i]
                    for j in range(n):
                        ga[j] -= b * g[j * n + i]
                    a[i] = 0
                i -= 1
            if i < 0:
                break
            d2 += 2 * ga[i] + g[i * n + i]
            ld += lcv[i]
            for j in range(n):
                ga[j] += g[j * n + i]
            a[i] += 1
            if _check(ld, d2, cons, ncons, &overflow):
                out.append((tuple([a[j] for j in range(n)]), ld, d2))
            if overflow:
                break
    finally:
        free(g); free(lcv); free(bnd); free(a); free(ga); free(cons)
    if overflow:
        return _kernels_py.scan_box(gram, lc, bounds, constraints)
    return out
