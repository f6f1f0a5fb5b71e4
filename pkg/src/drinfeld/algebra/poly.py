"""The polynomial ring A = F_q[T]."""

from .. import _kernels as K
from .field import field as _field

NEG_INF = float("-inf")


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class Poly:
    """Immutable polynomial in T over a finite field.

    ``coeffs`` lists coefficients lowest degree first with no trailing
    zeros; the zero polynomial has an empty tuple.
    """

    __slots__ = ("F", "c", "_hash")

    def __init__(self, F, coeffs=()):
        if isinstance(F, int):
            F = _field(F)
        self.F = F
        self.c = _trim(tuple(coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, F, c):
        # c already trimmed and reduced
        obj = object.__new__(cls)
        obj.F = F
        obj.c = c
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def zero(cls, F):
        return cls(F)

    @classmethod
    def one(cls, F):
        return cls(F, (1,))

    @classmethod
    def const(cls, F, a):
        return cls(F, (a,))

    @classmethod
    def gen(cls, F):
        return cls(F, (0, 1))

    @classmethod
    def monomial(cls, F, n, a=1):
        return cls(F, (0,) * n + (a,))

    # basic properties
    @property
    def q(self):
        return self.F.q

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def lc(self):
        return self.c[-1] if self.c else 0

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def is_one(self):
        return self.c == (1,)

    def is_constant(self):
        return len(self.c) <= 1

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def norm(self):
        """|a| = q^deg a (and 0 for a = 0)."""
        return self.F.q ** (len(self.c) - 1) if self.c else 0

    # comparisons
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c and self.F == other.F
        if isinstance(other, int):
            return self.c == _trim((self.F(other),))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.F.q, self.c))
        return self._hash

    def sort_key(self):
        """Degree first, then coefficients from the top down."""
        return (len(self.c), self.c[::-1])

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    # coercion
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.F != self.F:
                raise ValueError(f"mixing F_{self.F.q} and F_{other.F.q} polynomials")
            return other
        if isinstance(other, int):
            return Poly._raw(self.F, _trim((self.F(other),)))
        return None

    # ring operations
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        F = self.F
        if F.e == 1:
            p = F.p
            r = [(x + y) % p for x, y in zip(a, b)]
        else:
            t = F._add
            r = [t[x][y] for x, y in zip(a, b)]
        r.extend(a[len(b):])
        return Poly._raw(F, _trim(r))

    __radd__ = __add__

    def __neg__(self):
        F = self.F
        if F.e == 1:
            p = F.p
            return Poly._raw(F, tuple((-x) % p for x in self.c))
        return Poly._raw(F, tuple(F.neg(x) for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        F = self.F
        if isinstance(other, int):
            return self.scale(F(other))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.F != F:
            raise ValueError(f"mixing F_{F.q} and F_{other.F.q} polynomials")
        if not self.c or not other.c:
            return Poly._raw(F, ())
        if F.e == 1:
            return Poly._raw(F, K.mul(self.c, other.c, F.p))
        return Poly._raw(F, _mul_table(self.c, other.c, F))

    __rmul__ = __mul__

    def scale(self, a):
        """Multiply by the field element a."""
        F = self.F
        if not a:
            return Poly._raw(F, ())
        if F.e == 1:
            p = F.p
            return Poly._raw(F, tuple(x * a % p for x in self.c))
        m = F._mul[a]
        return Poly._raw(F, tuple(m[x] for x in self.c))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.F)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        if F.e == 1:
            qq, rr = K.divmod_(self.c, o.c, F.p)
        else:
            qq, rr = _divmod_table(self.c, o.c, F)
        return Poly._raw(F, qq), Poly._raw(F, rr)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.F.e == 1:
            if not o.c:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly._raw(self.F, K.rem(self.c, o.c, self.F.p))
        return divmod(self, o)[1]

    def exact_div(self, other):
        qq, rr = divmod(self, other)
        if rr:
            raise ArithmeticError(f"{other} does not divide {self}")
        return qq

    def divides(self, other):
        return not (other % self)

    def monic(self):
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == 1:
            return self
        return self.scale(self.F.inv(lc))

    def inverse(self):
        """Inverse in A; only nonzero constants are units."""
        if len(self.c) != 1:
            raise ArithmeticError(f"{self} is not a unit of F_q[T]")
        return Poly._raw(self.F, (self.F.inv(self.c[0]),))

    def gcd(self, other):
        o = self._coerce(other)
        F = self.F
        if F.e == 1:
            return Poly._raw(F, K.gcd(self.c, o.c, F.p))
        a, b = self, o
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, s, t) with g = s*self + t*other and g monic (or zero)."""
        F = self.F
        r0, r1 = self, self._coerce(other)
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while r1:
            qq, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - qq * s1
            t0, t1 = t1, t0 - qq * t1
        if not r0:
            return r0, s0, t0
        u = F.inv(r0.lc)
        return r0.scale(u), s0.scale(u), t0.scale(u)

    def lcm(self, other):
        if not self or not other:
            return Poly.zero(self.F)
        return (self * other // self.gcd(other)).monic()

    def invmod(self, n):
        """Inverse modulo n; raises ArithmeticError carrying the gcd."""
        g, s, _ = self.xgcd(n)
        if not g.is_one():
            raise NonUnitError(self, n, g)
        return s % n

    def powmod(self, e, n):
        result = Poly.one(self.F) % n
        base = self % n
        while e:
            if e & 1:
                result = result * base % n
            e >>= 1
            if e:
                base = base * base % n
        return result

    def derivative(self):
        F = self.F
        c = [F.mul(F(i), x) for i, x in enumerate(self.c)][1:]
        return Poly(F, c)

    def frobenius(self, k=1):
        """self(T^(q^k)); equals self^(q^k) because F_q is fixed by x -> x^q."""
        if not self.c or k == 0:
            return self
        step = self.F.q**k
        c = [0] * (step * (len(self.c) - 1) + 1)
        c[::step] = self.c
        return Poly._raw(self.F, tuple(c))

    def pth_root(self):
        """The unique g with g^p = self; raises if self is not a p-th power."""
        F = self.F
        p = F.p
        if any(x for i, x in enumerate(self.c) if i % p):
            raise ArithmeticError(f"{self} is not a p-th power")
        return Poly(F, [F.pth_root(x) for x in self.c[::p]])

    def __call__(self, x):
        """Evaluate at a field element (int), a Poly, or any ring element
        supporting + and * with ints."""
        if isinstance(x, int):
            F = self.F
            acc = 0
            for a in reversed(self.c):
                acc = F.add(F.mul(acc, x), a)
            return acc
        acc = x * 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def roots(self):
        """Roots in F_q, by exhaustion."""
        return [a for a in self.F.elements() if self(a) == 0]

    def is_irreducible(self):
        """Rabin's test over F_q."""
        d = len(self.c) - 1
        if d < 1:
            return False
        if d == 1:
            return True
        f = self.monic()
        T = Poly.gen(self.F)
        q = self.F.q
        primes = [r for r in range(2, d + 1) if d % r == 0 and all(r % s for s in range(2, r))]
        for r in primes:
            h = _xq_pow(T, q, d // r, f)
            if not (h - T).gcd(f).is_one():
                return False
        return (_xq_pow(T, q, d, f) - T) % f == 0

    def __repr__(self):
        return f"Poly({self.F.q}, {self!s})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var="T"):
        if not self.c:
            return "0"
        F = self.F
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            coef = F.element_str(a)
            if F.e > 1 and "+" in coef:
                coef = f"({coef})"
            if i == 0:
                terms.append(coef)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if a == 1 else f"{coef}{mono}")
        return "+".join(terms)


class NonUnitError(ArithmeticError):
    """Raised when inverting a non-unit of A/n; carries the gcd."""

    def __init__(self, element, modulus, g):
        super().__init__(f"{element} is not a unit modulo {modulus} (gcd {g})")
        self.element, self.modulus, self.gcd = element, modulus, g


def _xq_pow(x, q, k, f):
    # x^(q^k) mod f
    for _ in range(k):
        x = x.powmod(q, f)
    return x


def _mul_table(a, b, F):
    add, mul = F._add, F._mul
    res = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            row = mul[bj]
            for i, ai in enumerate(a):
                if ai:
                    res[i + j] = add[res[i + j]][row[ai]]
    return _trim(res)


def _divmod_table(a, b, F):
    db = len(b) - 1
    if len(a) <= db:
        return (), tuple(a)
    inv = F.inv(b[-1])
    r = list(a)
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            c = F.mul(c, inv)
            quo[k] = c
            negc = F.neg(c)
            for i in range(db):
                r[k + i] = F.add(r[k + i], F.mul(negc, b[i]))
        r[k + db] = 0
    return _trim(quo), _trim(r[:db])


def T(q):
    """The indeterminate T over F_q."""
    return Poly.gen(_field(q))


def monic_polys(q, d):
    """All monic polynomials of degree exactly d over F_q, in sort order."""
    F = _field(q)
    from itertools import product

    out = []
    for tail in product(range(q), repeat=d):
        out.append(Poly._raw(F, tuple(reversed(tail)) + (1,)))
    out.sort(key=Poly.sort_key)
    return out


def irreducible_monic(q, d):
    return [f for f in monic_polys(q, d) if f.is_irreducible()]
