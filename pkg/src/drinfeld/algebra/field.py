"""Finite fields F_q, q = p^e.

Elements are plain ints in ``range(q)``.  For e = 1 this is the residue
mod p.  For e > 1 the int ``sum c_i p^i`` encodes ``sum c_i x^i`` modulo a
fixed Conway-style polynomial, so the prime field sits inside as 0..p-1.
"""

from functools import lru_cache
from itertools import product


def prime_power(q):
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, m = 0, q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _polymulmod_p(a, b, mod, p):
    # a, b: coefficient lists of length e over F_p; mod: monic, length e+1
    e = len(mod) - 1
    res = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    for k in range(len(res) - 1, e - 1, -1):
        c = res[k] % p
        if c:
            for i in range(e):
                res[k - e + i] -= c * mod[i]
        res[k] = 0
    return [c % p for c in res[:e]]


def _order_of_x(mod, p):
    """Multiplicative order of x modulo mod, or None if mod is reducible
    enough that x is not a unit of a field of size p^e."""
    e = len(mod) - 1
    q = p**e
    one = [1] + [0] * (e - 1)
    x = [0, 1] + [0] * (e - 2) if e > 1 else [(-mod[0]) % p]
    cur = list(x)
    for k in range(1, q):
        if cur == one:
            return k
        cur = _polymulmod_p(cur, x, mod, p)
    return None


@lru_cache(maxsize=None)
def conway_polynomial(p, e):
    """Monic primitive polynomial of degree e over F_p.

    Chosen as the least primitive polynomial when the coefficients below
    the leading one are read as (-1)^i c_{e-i}, i = 1..e, the ordering used
    for Conway polynomials.  For e <= 2 this gives the Conway polynomial
    itself; for larger e it is deterministic but may skip the compatibility
    condition.  Returned lowest degree first, leading 1 included.
    """
    q = p**e
    for digits in product(range(p), repeat=e):
        coeffs = [0] * e
        for i, d in enumerate(digits, start=1):
            coeffs[e - i] = (d * (-1) ** i) % p
        mod = coeffs + [1]
        if mod[0] == 0:
            continue
        if _order_of_x(mod, p) == q - 1:
            return tuple(mod)
    raise ValueError(f"no primitive polynomial of degree {e} over F_{p}")


class GF:
    """The finite field with q elements."""

    __slots__ = ("q", "p", "e", "modulus", "_mul", "_add", "_inv", "_gen")

    def __init__(self, q):
        p, e = prime_power(q)
        self.q, self.p, self.e = q, p, e
        self._mul = self._add = self._inv = None
        if e == 1:
            self.modulus = (0, 1)
            self._gen = _primitive_root(p)
        else:
            if q > 4096:
                raise ValueError(f"extension field F_{q} too large for tables")
            self.modulus = conway_polynomial(p, e)
            self._build_tables()
            self._gen = p  # the class of x

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q

        def digits(a):
            out = []
            for _ in range(e):
                out.append(a % p)
                a //= p
            return out

        def encode(ds):
            return sum(d * p**i for i, d in enumerate(ds))

        dig = [digits(a) for a in range(q)]
        self._add = [
            [encode([(x + y) % p for x, y in zip(dig[a], dig[b])]) for b in range(q)]
            for a in range(q)
        ]
        # exp/log through the primitive element x
        exp = [0] * (q - 1)
        cur = [1] + [0] * (e - 1)
        x = [0, 1] + [0] * (e - 2)
        for k in range(q - 1):
            exp[k] = encode(cur)
            cur = _polymulmod_p(cur, x, list(self.modulus), p)
        log = {v: k for k, v in enumerate(exp)}
        self._mul = [
            [0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % (q - 1)] for b in range(q)]
            for a in range(q)
        ]
        self._inv = [0] + [exp[(-log[a]) % (q - 1)] for a in range(1, q)]

    # identity by size: GF(9) built twice is the same field
    def __eq__(self, other):
        return isinstance(other, GF) and self.q == other.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def is_prime(self):
        return self.e == 1

    @property
    def gen(self):
        """A generator of the multiplicative group."""
        return self._gen

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def __call__(self, n):
        """Image of the integer n in the prime field."""
        return n % self.p

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._mul[a][self.p - 1]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if self.e == 1:
            if n < 0:
                a, n = self.inv(a), -n
            return pow(a, n, self.p)
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a):
        """Some square root of a; raises ValueError for non-squares."""
        for x in range(self.q):
            if self.mul(x, x) == a:
                return x
        raise ValueError(f"{a} is not a square in F_{self.q}")

    def pth_root(self, a):
        """The unique b with b^p = a."""
        return self.pow(a, self.q // self.p)

    def element_str(self, a):
        if self.e == 1:
            return str(a)
        ds = []
        m = a
        for _ in range(self.e):
            ds.append(m % self.p)
            m //= self.p
        terms = []
        for i in range(self.e - 1, -1, -1):
            d = ds[i]
            if not d:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                terms.append(str(d))
            else:
                terms.append(mono if d == 1 else f"{d}{mono}")
        return "+".join(terms) if terms else "0"


def _primitive_root(p):
    if p == 2:
        return 1
    factors = [d for d in range(2, p) if (p - 1) % d == 0 and all(d % f for f in range(2, d))]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def field(q):
    """Shared GF instance for q."""
    return GF(q)
