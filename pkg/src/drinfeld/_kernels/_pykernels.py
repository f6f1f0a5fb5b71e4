"""Pure-Python kernels for dense polynomials over a prime field F_p.

Polynomials are tuples of ints in [0, p), lowest degree first, with no
trailing zeros. The compiled module ``_ckernels`` exposes the same names.
"""

# above this many coefficients, Kronecker substitution through Python's
# big-integer multiply beats the schoolbook double loop
_KRONECKER_MIN = 40


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _schoolbook(a, b, p):
    res = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                res[i + j] += ai * bj
    return [c % p for c in res]


def _kronecker(a, b, p):
    bound = min(len(a), len(b)) * (p - 1) ** 2
    width = (bound.bit_length() + 8) // 8
    pa = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    pb = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (pa * pb).to_bytes(n * width, "little")
    return [
        int.from_bytes(raw[i : i + width], "little") % p
        for i in range(0, n * width, width)
    ]


def mul(a, b, p):
    if not a or not b:
        return ()
    if min(len(a), len(b)) >= _KRONECKER_MIN:
        return trim(_kronecker(a, b, p))
    return trim(_schoolbook(a, b, p))


def divmod_(a, b, p):
    """Quotient and remainder of a by nonzero b."""
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) <= db:
        return (), tuple(a)
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            c = c * inv % p
            quo[k] = c
            for i in range(db):
                r[k + i] -= c * b[i]
        r[k + db] = 0
    return trim(quo), trim([x % p for x in r[:db]])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    """Monic gcd."""
    while b:
        a, b = b, rem(a, b, p)
    if not a:
        return ()
    inv = pow(a[-1], p - 2, p)
    return tuple(c * inv % p for c in a)


def orbit_labels(perms, size):
    """Label each of ``size`` points by the index of its orbit under the
    group generated by the permutations ``perms`` (lists of images)."""
    label = [-1] * size
    count = 0
    for seed in range(size):
        if label[seed] >= 0:
            continue
        label[seed] = count
        stack = [seed]
        while stack:
            x = stack.pop()
            for g in perms:
                y = g[x]
                if label[y] < 0:
                    label[y] = count
                    stack.append(y)
        count += 1
    return label, count
