"""Truncated Laurent series with exact coefficients and tracked precision.

A series is ``sum_{k >= val} c_k v^k + O(v^prec)``: coefficients below
``prec`` are exact, everything from ``prec`` on is unknown.  Coefficients
live in F_q[T] or F_q(T) (``Poly`` or ``RatFunc``); any ring elements with
``+ - *``, truthiness and, for division, ``inverse()`` will do.
"""


class PrecisionError(ArithmeticError):
    """A requested coefficient lies at or beyond the known precision."""

    def __init__(self, msg, first_unknown=None):
        super().__init__(msg)
        self.first_unknown = first_unknown


class Series:
    __slots__ = ("val", "c", "prec", "var", "zero")

    def __init__(self, coeffs, val, prec, zero, var="t"):
        """coeffs[i] is the coefficient of var^(val+i); entries at or past
        ``prec`` are dropped, leading zeros are stripped."""
        coeffs = [zero + x if isinstance(x, int) else x for x in coeffs]
        n = max(0, min(len(coeffs), prec - val))
        coeffs = coeffs[:n]
        k = 0
        while k < n and not coeffs[k]:
            k += 1
        self.c = tuple(coeffs[k:])
        self.val = val + k if self.c else prec
        self.prec = prec
        self.zero = zero
        self.var = var
        if self.c and prec < self.val:
            raise ValueError("precision below the lowest exponent")
        # pad to full length so index arithmetic is uniform
        if self.c and len(self.c) < prec - self.val:
            self.c = self.c + (zero,) * (prec - self.val - len(self.c))

    @classmethod
    def _raw(cls, c, val, prec, zero, var):
        obj = object.__new__(cls)
        obj.c, obj.val, obj.prec, obj.zero, obj.var = c, val, prec, zero, var
        return obj

    @classmethod
    def from_dict(cls, terms, prec, zero, var="t"):
        """Series from {exponent: coefficient}."""
        terms = {k: v for k, v in terms.items() if k < prec}
        if not terms:
            return cls((), prec, prec, zero, var)
        lo = min(terms)
        coeffs = [terms.get(k, zero) for k in range(lo, prec)]
        return cls(coeffs, lo, prec, zero, var)

    @classmethod
    def monomial(cls, k, coeff, prec, zero, var="t"):
        return cls.from_dict({k: coeff}, prec, zero, var)

    @classmethod
    def one(cls, prec, zero, var="t"):
        return cls.from_dict({0: zero + 1}, prec, zero, var)

    # inspection
    def is_zero(self):
        return not self.c

    @property
    def rel_prec(self):
        return self.prec - self.val

    @property
    def lead(self):
        if not self.c:
            raise PrecisionError(f"series is zero to precision {self.prec}", self.prec)
        return self.c[0]

    def __getitem__(self, k):
        if k >= self.prec:
            raise PrecisionError(
                f"coefficient of {self.var}^{k} unknown (precision {self.prec})", self.prec
            )
        if k < self.val:
            return self.zero
        return self.c[k - self.val]

    def coefficients(self, lo, hi):
        return [self[k] for k in range(lo, hi)]

    def terms(self):
        """(exponent, coefficient) for each nonzero known term."""
        return [(self.val + i, x) for i, x in enumerate(self.c) if x]

    def _same(self, other):
        if self.var != other.var:
            raise ValueError(f"mixing series in {self.var} and {other.var}")

    def _lift(self, other):
        if isinstance(other, Series):
            self._same(other)
            return other
        # scalar: exact constant, precision never limits
        x = self.zero + other
        return Series.from_dict({0: x}, max(self.prec, 1), self.zero, self.var)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Series):
            x = self.zero + other
            prec = self.prec
            if prec <= 0:
                return self
            return self + Series.from_dict({0: x}, prec, self.zero, self.var)
        self._same(other)
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        if lo >= prec:
            return Series._raw((), prec, prec, self.zero, self.var)
        out = [self.zero] * (prec - lo)
        for s in (self, other):
            off = s.val - lo
            for i, x in enumerate(s.c[: prec - s.val]):
                if x:
                    out[off + i] = out[off + i] + x
        return Series(out, lo, prec, self.zero, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(tuple(-x for x in self.c), self.val, self.prec, self.zero, self.var)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return self + (-(self.zero + other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, x):
        """Multiply every coefficient by the ring element x."""
        if not x:
            return Series._raw((), self.prec, self.prec, self.zero, self.var)
        return Series([y * x for y in self.c], self.val, self.prec, self.zero, self.var)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._same(other)
        prec = min(self.val + other.prec, other.val + self.prec)
        if not self.c or not other.c:
            return Series._raw((), prec, prec, self.zero, self.var)
        val = self.val + other.val
        n = prec - val
        a, b = self.c, other.c
        out = [self.zero] * n
        for i in range(min(n, len(a))):
            x = a[i]
            if not x:
                continue
            for j in range(min(n - i, len(b))):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        return Series(out, val, prec, self.zero, self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, k):
        """Multiply by var^k."""
        return Series._raw(self.c, self.val + k, self.prec + k, self.zero, self.var)

    def truncate(self, prec):
        """Forget everything from var^prec on."""
        if prec >= self.prec:
            return self
        return Series(self.c, self.val, prec, self.zero, self.var)

    def with_prec(self, prec):
        """Treat the known part as exact and extend (with zeros) or cut to prec."""
        if prec <= self.prec:
            return self.truncate(prec)
        return Series(self.c, self.val if self.c else prec, prec, self.zero, self.var)

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError(f"series is zero to precision {self.prec}")
        n = len(self.c)
        a = self.c
        inv0 = a[0].inverse()
        b = [inv0]
        for k in range(1, n):
            acc = self.zero
            for i in range(1, k + 1):
                x = a[i]
                if x:
                    acc = acc + x * b[k - i]
            b.append(-(acc * inv0))
        return Series(b, -self.val, -self.val + n, self.zero, self.var)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return self.scale(other.inverse() if hasattr(other, "inverse") else (self.zero + other).inverse())

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return Series.one(max(self.rel_prec, 1), self.zero, self.var)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, k, q, cap=None):
        """Apply x -> x^(q^k) to coefficients and v -> v^(q^k).

        This is the (q^k)-th power of the series when the coefficients lie
        in F_q(T).  ``cap`` limits the stored precision.
        """
        Q = q**k
        prec = Q * self.prec
        if cap is not None:
            prec = min(prec, cap)
        if not self.c:
            return Series._raw((), prec, prec, self.zero, self.var)
        terms = {}
        for i, x in enumerate(self.c):
            e = Q * (self.val + i)
            if e >= prec:
                break
            if x:
                terms[e] = x.frobenius(k)
        return Series.from_dict(terms, prec, self.zero, self.var)

    def map_coefficients(self, fn, zero=None):
        zero = self.zero if zero is None else zero
        return Series([fn(x) for x in self.c], self.val, self.prec, zero, self.var)

    def rename(self, var):
        return Series._raw(self.c, self.val, self.prec, self.zero, var)

    def substitute(self, inner):
        """Formal composition self(inner); inner must have positive valuation.

        Result precision is min(vi * prec_outer, vo * vi + relprec_inner),
        with vo, vi the lowest exponents of outer and inner.
        """
        if not inner.c or inner.val <= 0:
            raise ValueError("inner series must have strictly positive valuation")
        vi, ri = inner.val, inner.rel_prec
        if not self.c:
            prec = vi * self.prec
            return Series._raw((), prec, prec, self.zero, inner.var)
        vo = self.val
        prec = min(vi * self.prec, vo * vi + ri)
        total = Series._raw((), prec, prec, self.zero, inner.var)
        power = (inner**vo).truncate(prec)
        for i in range(vo, self.prec):
            if i * vi >= prec:
                break
            x = self[i]
            if x:
                total = total + power.scale(x).truncate(prec)
            power = (power * inner).truncate(prec)
        return total

    def nth_root(self, n, leading):
        """r with r^n = self, lowest coefficient ``leading``.

        Needs n prime to the characteristic, n | val, and leading^n equal to
        the lowest coefficient.  Newton iteration on the unit part.
        """
        if not self.c:
            raise ValueError("root of a series that is zero to precision")
        p = _characteristic(self.zero)
        if n % p == 0:
            raise ValueError(f"root index {n} divisible by the characteristic {p}")
        if self.val % n:
            raise ValueError(f"lowest exponent {self.val} not divisible by {n}")
        lead = self.c[0]
        if leading**n != lead:
            raise ValueError("chosen leading coefficient is not an n-th root")
        rel = self.rel_prec
        u = Series(self.c, 0, rel, self.zero, self.var).scale(lead.inverse())
        inv_n = pow(n, -1, p)
        y = Series.one(1, self.zero, self.var)
        m = 1
        while m < rel:
            m = min(2 * m, rel)
            y = y.with_prec(m)
            ym1 = y ** (n - 1)
            diff = ym1 * y - u.truncate(m)
            y = y - (diff * ym1.inverse()).scale(self.zero + inv_n)
        return y.truncate(rel).scale(leading).shift(self.val // n)

    def equals(self, other):
        """Agreement on the common known range."""
        self._same(other)
        prec = min(self.prec, other.prec)
        return (self - other).truncate(prec).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.var == other.var
            and self.prec == other.prec
            and self.val == other.val
            and self.c == other.c
        )

    __hash__ = None

    def __repr__(self):
        return f"Series({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, coeff_str=str):
        parts = []
        for e, x in self.terms():
            s = coeff_str(x)
            if "+" in s or "/" in s:
                s = f"({s})"
            mono = "1" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            parts.append(f"{s}*{mono}")
        parts.append(f"O({self.var}^{self.prec})")
        return " + ".join(parts)


def _characteristic(zero):
    return zero.F.p
