# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels over F_q.

Polynomials are tuples of ints, lowest degree first, with no trailing zeros.
Field elements are ints in [0, q).  Prime fields use modular arithmetic with
delayed reduction; extension fields go through q*q lookup tables.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

BACKEND = "compiled"


cdef class FieldContext:
    cdef readonly int p, q
    cdef bint prime
    cdef int *add_t
    cdef int *mul_t
    cdef int *neg_t
    cdef int *inv_t

    def __cinit__(self, int p, int q, add_table=None, mul_table=None,
                  neg_table=None, inv_table=None):
        cdef int i, j
        self.p = p
        self.q = q
        self.prime = p == q
        self.add_t = NULL
        self.mul_t = NULL
        self.neg_t = NULL
        self.inv_t = NULL
        if self.prime:
            return
        self.add_t = <int *> malloc(q * q * sizeof(int))
        self.mul_t = <int *> malloc(q * q * sizeof(int))
        self.neg_t = <int *> malloc(q * sizeof(int))
        self.inv_t = <int *> malloc(q * sizeof(int))
        if not (self.add_t and self.mul_t and self.neg_t and self.inv_t):
            raise MemoryError()
        for i in range(q):
            self.neg_t[i] = neg_table[i]
            self.inv_t[i] = inv_table[i]
            for j in range(q):
                self.add_t[i * q + j] = add_table[i][j]
                self.mul_t[i * q + j] = mul_table[i][j]

    def __dealloc__(self):
        free(self.add_t)
        free(self.mul_t)
        free(self.neg_t)
        free(self.inv_t)


cdef inline int _add(FieldContext F, int a, int b):
    cdef int r
    if F.prime:
        r = a + b
        return r - F.p if r >= F.p else r
    return F.add_t[a * F.q + b]


cdef inline int _sub(FieldContext F, int a, int b):
    cdef int r
    if F.prime:
        r = a - b
        return r + F.p if r < 0 else r
    return F.add_t[a * F.q + F.neg_t[b]]


cdef inline int _mul(FieldContext F, int a, int b):
    if F.prime:
        return <int> ((<uint64_t> a * <uint64_t> b) % <uint64_t> F.p)
    return F.mul_t[a * F.q + b]


cdef int _inv(FieldContext F, int a) except -1:
    cdef long long r = 1, base = a, e = F.p - 2
    if a == 0:
        raise ZeroDivisionError("inverse of zero in F_q")
    if not F.prime:
        return F.inv_t[a]
    while e > 0:
        if e & 1:
            r = (r * base) % F.p
        base = (base * base) % F.p
        e >>= 1
    return <int> r


cdef int *_load(tuple a, Py_ssize_t extra=0) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef int *buf = <int *> malloc((n + extra + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    for i in range(n, n + extra + 1):
        buf[i] = 0
    return buf


cdef tuple _dump(int *buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return tuple([buf[i] for i in range(n)])


def poly_add(FieldContext F, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    cdef int *r = _load(a)
    try:
        for i in range(nb):
            r[i] = _add(F, r[i], b[i])
        return _dump(r, na)
    finally:
        free(r)


def poly_sub(FieldContext F, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), n = max(na, nb), i
    cdef int *r = _load(a, n - na)
    try:
        for i in range(nb):
            r[i] = _sub(F, r[i], b[i])
        return _dump(r, n)
    finally:
        free(r)


def poly_neg(FieldContext F, tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef int *r = _load(a)
    try:
        for i in range(n):
            r[i] = _sub(F, 0, r[i])
        return _dump(r, n)
    finally:
        free(r)


def poly_scale(FieldContext F, tuple a, int c):
    cdef Py_ssize_t n = len(a), i
    if c == 0:
        return ()
    cdef int *r = _load(a)
    try:
        for i in range(n):
            r[i] = _mul(F, r[i], c)
        return _dump(r, n)
    finally:
        free(r)


def poly_mul(FieldContext F, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), n, i, j
    cdef int ai
    cdef uint64_t p
    cdef uint64_t *acc
    cdef int *r
    cdef int *x
    cdef int *y
    if na == 0 or nb == 0:
        return ()
    n = na + nb - 1
    x = _load(a)
    y = _load(b)
    r = <int *> malloc(n * sizeof(int))
    try:
        if F.prime:
            p = F.p
            acc = <uint64_t *> malloc(n * sizeof(uint64_t))
            if acc == NULL:
                raise MemoryError()
            for i in range(n):
                acc[i] = 0
            # p < 2**15, so 2**34 products fit before reduction
            for i in range(na):
                ai = x[i]
                if ai == 0:
                    continue
                for j in range(nb):
                    acc[i + j] += <uint64_t> ai * <uint64_t> y[j]
            for i in range(n):
                r[i] = <int> (acc[i] % p)
            free(acc)
        else:
            for i in range(n):
                r[i] = 0
            for i in range(na):
                ai = x[i]
                if ai == 0:
                    continue
                for j in range(nb):
                    if y[j]:
                        r[i + j] = F.add_t[r[i + j] * F.q + F.mul_t[ai * F.q + y[j]]]
        return _dump(r, n)
    finally:
        free(x)
        free(y)
        free(r)


cdef Py_ssize_t _rem_inplace(FieldContext F, int *r, Py_ssize_t dr, int *b,
                             Py_ssize_t db, int *quot) except -2:
    """Reduce r (degree dr) modulo b (degree db) in place; return new degree."""
    cdef int inv_lc = _inv(F, b[db]), c
    cdef Py_ssize_t i, j, shift
    cdef int p = F.p
    i = dr
    while i >= db:
        c = _mul(F, r[i], inv_lc)
        shift = i - db
        if quot != NULL:
            quot[shift] = c
        if c:
            if F.prime:
                for j in range(db + 1):
                    r[shift + j] = (r[shift + j] + p - <int> ((<uint64_t> c * <uint64_t> b[j]) % <uint64_t> p)) % p
            else:
                for j in range(db + 1):
                    r[shift + j] = _sub(F, r[shift + j], _mul(F, c, b[j]))
        i -= 1
    i = min(dr, db - 1)
    while i >= 0 and r[i] == 0:
        i -= 1
    return i


def poly_divmod(FieldContext F, tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), dr, nq, i
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return (), a
    nq = na - nb + 1
    cdef int *r = _load(a)
    cdef int *y = _load(b)
    cdef int *qt = <int *> malloc(nq * sizeof(int))
    try:
        for i in range(nq):
            qt[i] = 0
        dr = _rem_inplace(F, r, na - 1, y, nb - 1, qt)
        return _dump(qt, nq), _dump(r, dr + 1)
    finally:
        free(r)
        free(y)
        free(qt)


def poly_gcd(FieldContext F, tuple a, tuple b):
    """Monic gcd; gcd(0, 0) = 0."""
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, dt, i
    cdef int *x
    cdef int *y
    cdef int *t
    cdef int inv_lc
    if da < db:
        a, b = b, a
        da, db = db, da
    if da < 0:
        return ()
    x = _load(a)
    y = _load(b)
    try:
        while db >= 0:
            dt = _rem_inplace(F, x, da, y, db, NULL)
            t = x
            x = y
            y = t
            da = db
            db = dt
        inv_lc = _inv(F, x[da])
        for i in range(da + 1):
            x[i] = _mul(F, x[i], inv_lc)
        return _dump(x, da + 1)
    finally:
        free(x)
        free(y)
