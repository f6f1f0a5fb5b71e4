# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomials over F_p; see _pykernels for the
reference semantics."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef tuple _pack(i64 *buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return tuple([buf[i] for i in range(n)])


cdef i64 *_load(object seq, Py_ssize_t n) except NULL:
    cdef i64 *buf = <i64 *> malloc((n if n > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef i64 _inv(i64 a, i64 p):
    cdef i64 result = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


def trim(c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def mul(a, b, long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n
    if na == 0 or nb == 0:
        return ()
    if p >= (1 << 20):
        raise OverflowError("prime too large for compiled kernel")
    n = na + nb - 1
    cdef i64 *x = _load(a, na)
    cdef i64 *y = _load(b, nb)
    cdef i64 *r = <i64 *> malloc(n * sizeof(i64))
    cdef i64 yj, acc
    # (p-1)^2 < 2^40, so 2^22 products fit before a reduction is needed
    cdef Py_ssize_t flush = 1 << 22
    try:
        for i in range(n):
            r[i] = 0
        for j in range(nb):
            yj = y[j]
            if yj:
                for i in range(na):
                    r[i + j] += x[i] * yj
            if (j + 1) % flush == 0:
                for i in range(n):
                    r[i] %= p
        for i in range(n):
            r[i] %= p
        return _pack(r, n)
    finally:
        free(x)
        free(y)
        free(r)


def divmod_(a, b, long p):
    cdef Py_ssize_t na = len(a), nb = len(b), db, k, i
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = nb - 1
    if na <= db:
        return (), tuple(a)
    cdef i64 *r = _load(a, na)
    cdef i64 *y = _load(b, nb)
    cdef i64 *quo = <i64 *> malloc((na - db) * sizeof(i64))
    cdef i64 inv = _inv(y[db], p), c
    try:
        for k in range(na - 1 - db, -1, -1):
            c = r[k + db] % p
            if c < 0:
                c += p
            c = c * inv % p
            quo[k] = c
            if c:
                for i in range(db):
                    r[k + i] = (r[k + i] - c * y[i]) % p
            r[k + db] = 0
        for i in range(db):
            r[i] %= p
            if r[i] < 0:
                r[i] += p
        return _pack(quo, na - db), _pack(r, db)
    finally:
        free(r)
        free(y)
        free(quo)


def rem(a, b, long p):
    return divmod_(a, b, p)[1]


def gcd(a, b, long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, k, da, db
    cdef i64 *x = _load(a, na)
    cdef i64 *y = _load(b, nb)
    cdef i64 *t
    cdef i64 inv, c
    try:
        for i in range(na):
            x[i] %= p
        for i in range(nb):
            y[i] %= p
        while na and x[na - 1] == 0:
            na -= 1
        while nb and y[nb - 1] == 0:
            nb -= 1
        while nb:
            # x <- x mod y, then swap
            db = nb - 1
            inv = _inv(y[db], p)
            for k in range(na - 1 - db, -1, -1):
                c = x[k + db] * inv % p
                if c:
                    for i in range(db):
                        x[k + i] = (x[k + i] - c * y[i]) % p
                        if x[k + i] < 0:
                            x[k + i] += p
                x[k + db] = 0
            if na > db:
                na = db
            while na and x[na - 1] == 0:
                na -= 1
            t = x
            x = y
            y = t
            k = na
            na = nb
            nb = k
        if na == 0:
            return ()
        inv = _inv(x[na - 1], p)
        for i in range(na):
            x[i] = x[i] * inv % p
        return _pack(x, na)
    finally:
        free(x)
        free(y)


def orbit_labels(perms, Py_ssize_t size):
    cdef Py_ssize_t ng = len(perms), g, seed, top, xx, yy, count = 0
    cdef Py_ssize_t *table = <Py_ssize_t *> malloc((ng * size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *label = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *stack = <Py_ssize_t *> malloc((size + 1) * sizeof(Py_ssize_t))
    try:
        for g in range(ng):
            row = perms[g]
            for xx in range(size):
                table[g * size + xx] = row[xx]
        for xx in range(size):
            label[xx] = -1
        for seed in range(size):
            if label[seed] >= 0:
                continue
            label[seed] = count
            stack[0] = seed
            top = 1
            while top:
                top -= 1
                xx = stack[top]
                for g in range(ng):
                    yy = table[g * size + xx]
                    if label[yy] < 0:
                        label[yy] = count
                        stack[top] = yy
                        top += 1
            count += 1
        return [label[xx] for xx in range(size)], count
    finally:
        free(table)
        free(label)
        free(stack)
