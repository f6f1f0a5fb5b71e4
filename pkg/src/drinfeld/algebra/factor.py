"""Factorization in F_q[T]: square-free split, distinct-degree and
equal-degree (Cantor–Zassenhaus) stages."""

import random

from .poly import Poly


def _sqf(f):
    """Square-free decomposition over the perfect field F_q: list of
    (g, k) with f = prod g^k, g square-free and coprime."""
    F = f.F
    p = F.p
    out = []
    i = 1
    c = f.gcd(f.derivative())
    w = f // c
    while not w.is_one():
        y = w.gcd(c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w, c = y, c // y
    if not c.is_one():
        # c is a p-th power
        for g, k in _sqf(c.pth_root()):
            out.append((g, k * p))
    return out


def _ddf(f):
    """Distinct-degree split of a monic square-free f: list of (g, d),
    g the product of the irreducible factors of degree d."""
    F = f.F
    q = F.q
    T = Poly.gen(F)
    out = []
    h = T % f
    d = 0
    while f.deg >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = (h - T).gcd(f)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.deg > 0:
        out.append((f, f.deg))
    return out


def _edf(f, d, rng):
    """Split f (product of irreducibles of degree d) into its factors."""
    F = f.F
    q = F.q
    if f.deg == d:
        return [f]
    while True:
        a = Poly(F, [rng.randrange(q) for _ in range(f.deg)])
        if a.deg < 1:
            continue
        if q % 2:
            b = a.powmod((q**d - 1) // 2, f) - 1
        else:
            # absolute trace down to F_2 on F_{q^d}
            m = F.e * d
            b = a % f
            t = b
            for _ in range(m - 1):
                t = t.powmod(2, f)
                b = b + t
        g = b.gcd(f)
        if 0 < g.deg < f.deg:
            return _edf(g, d, rng) + _edf(f // g, d, rng)


def factorize(n):
    """Monic irreducible factors with multiplicities, sorted by degree
    then coefficients."""
    if not n:
        raise ValueError("cannot factor zero")
    f = n.monic()
    if f.deg == 0:
        return []
    rng = random.Random(0x5EED)
    mult = {}
    for g, k in _sqf(f):
        for h, d in _ddf(g):
            for irr in _edf(h, d, rng):
                mult[irr] = mult.get(irr, 0) + k
    return sorted(mult.items(), key=lambda item: item[0].sort_key())


def is_prime(n):
    fs = factorize(n)
    return len(fs) == 1 and fs[0][1] == 1


def squarefree_kernel(n):
    """Monic product of primes dividing n to an odd power."""
    out = Poly.one(n.F)
    for p, r in factorize(n):
        if r % 2:
            out = out * p
    return out
