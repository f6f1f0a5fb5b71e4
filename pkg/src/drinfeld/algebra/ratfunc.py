"""Rational functions F_q(T) in canonical form."""

from .poly import Poly


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den, self._hash = num.num, num.den, None
            return
        F = num.F
        if den is None:
            den = Poly.one(F)
        elif isinstance(den, int):
            den = Poly.const(F, F(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, Poly.one(F)
        else:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                inv = F.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def from_poly(cls, f):
        return cls._raw(f, Poly.one(f.F))

    @property
    def F(self):
        return self.num.F

    @property
    def q(self):
        return self.num.F.q

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.is_one()

    def to_poly(self):
        if not self.den.is_one():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if not self.den.is_one() else hash(self.num)
        return self._hash

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly.one(other.F))
        if isinstance(other, int):
            return RatFunc._raw(Poly.const(self.F, self.F(other)), Poly.one(self.F))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc._raw(self.num + o.num, self.den)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc._raw(self.num * o.num, self.den)
        # cross-cancel before multiplying
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = (self.num // g1, o.den // g1) if not g1.is_one() else (self.num, o.den)
        n2, d1 = (o.num // g2, self.den // g2) if not g2.is_one() else (o.num, self.den)
        num, den = n1 * n2, d1 * d2
        if not num:
            return RatFunc._raw(num, Poly.one(self.F))
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        num, den = self.den, self.num
        lc = den.lc
        if lc != 1:
            inv = self.F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    def frobenius(self, k=1):
        return RatFunc._raw(self.num.frobenius(k), self.den.frobenius(k))

    def derivative(self):
        """d/dT."""
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def is_pth_power(self):
        p = self.F.p
        return all(not x for i, x in enumerate(self.num.c) if i % p) and all(
            not x for i, x in enumerate(self.den.c) if i % p
        )

    def pth_root(self):
        return RatFunc._raw(self.num.pth_root(), self.den.pth_root())

    def valuation(self, prime):
        """Valuation at a monic irreducible prime of A."""
        if not self.num:
            return float("inf")
        return _vp(self.num, prime) - _vp(self.den, prime)

    def valuation_inf(self):
        """Valuation at the infinite place, deg den - deg num."""
        if not self.num:
            return float("inf")
        return self.den.deg - self.num.deg

    def substitute(self, x):
        """Evaluate num and den at x (a ring element with division)."""
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var="T"):
        n = self.num.to_str(var)
        if self.den.is_one():
            return n
        d = self.den.to_str(var)
        if len(self.num.c) > 1 and "+" in n:
            n = f"({n})"
        if "+" in d or (len(self.den.c) > 1 and not _is_monomial(self.den)):
            d = f"({d})"
        return f"{n}/{d}"


def _is_monomial(f):
    return sum(1 for x in f.c if x) == 1


def _vp(f, prime):
    v = 0
    while True:
        qq, r = divmod(f, prime)
        if r:
            return v
        f = qq
        v += 1


def as_ratfunc(x, F=None):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    if isinstance(x, int):
        return RatFunc.from_poly(Poly.const(F, F(x)))
    raise TypeError(f"cannot interpret {x!r} as a rational function")
