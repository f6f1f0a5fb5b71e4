"""Polynomials in one variable over F_q(T), with gcd and square-free parts.

F_q(T) is not perfect, so square-free extraction uses both derivations
d/dx and d/dT: a repeated irreducible factor P divides f, f_x and f_T, and
a common factor of all three is either repeated or a p-th power in
F_q(T)[x], which is detected and rooted separately.
"""

from .poly import Poly
from .ratfunc import RatFunc, as_ratfunc


class UPoly:
    """Immutable polynomial sum c_i x^i with RatFunc coefficients."""

    __slots__ = ("F", "c", "var")

    def __init__(self, coeffs, F=None, var="x"):
        cs = [as_ratfunc(x, F) for x in coeffs]
        if F is None:
            if not cs:
                raise ValueError("field needed for the zero polynomial")
            F = cs[0].F
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        self.F = F
        self.c = tuple(cs[:n])
        self.var = var

    @classmethod
    def _raw(cls, c, F, var):
        obj = object.__new__(cls)
        obj.c, obj.F, obj.var = c, F, var
        return obj

    @classmethod
    def x(cls, F, var="x"):
        return cls([0, 1], F, var)

    @classmethod
    def const(cls, a, F, var="x"):
        return cls([a], F, var)

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else float("-inf")

    @property
    def lc(self):
        return self.c[-1]

    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def coeff(self, i):
        if 0 <= i < len(self.c):
            return self.c[i]
        return as_ratfunc(0, self.F)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.c == other.c
        if isinstance(other, (RatFunc, Poly, int)):
            return self == UPoly([other], self.F, self.var)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _co(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (RatFunc, Poly, int)):
            return UPoly([other], self.F, self.var)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = [x + y for x, y in zip(a, b)] + list(a[len(b):])
        return UPoly(out, self.F, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw(tuple(-x for x in self.c), self.F, self.var)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return UPoly._raw((), self.F, self.var)
        if len(o.c) == 1:
            k = o.c[0]
            return UPoly([x * k for x in self.c], self.F, self.var)
        out = [None] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(o.c):
                if y:
                    t = x * y
                    out[i + j] = t if out[i + j] is None else out[i + j] + t
        zero = as_ratfunc(0, self.F)
        return UPoly([zero if v is None else v for v in out], self.F, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UPoly([1], self.F, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._co(other)
        if not o.c:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.c)
        db = len(o.c) - 1
        inv = o.c[-1].inverse()
        quo = [as_ratfunc(0, self.F)] * max(0, len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if c:
                c = c * inv
                quo[k] = c
                for i in range(db):
                    if o.c[i]:
                        r[k + i] = r[k + i] - c * o.c[i]
            r[k + db] = as_ratfunc(0, self.F)
        return UPoly(quo, self.F, self.var), UPoly(r[:db], self.F, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        qq, rr = divmod(self, other)
        if rr:
            raise ArithmeticError("inexact polynomial division")
        return qq

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        inv = self.c[-1].inverse()
        return UPoly([x * inv for x in self.c], self.F, self.var)

    def derivative(self):
        """d/dx."""
        out = [x * i for i, x in enumerate(self.c)][1:]
        return UPoly(out, self.F, self.var)

    def derivative_T(self):
        """The derivation d/dT applied to the coefficients."""
        return UPoly([x.derivative() for x in self.c], self.F, self.var)

    def is_pth_power(self):
        p = self.F.p
        return all(not x for i, x in enumerate(self.c) if i % p) and all(
            x.is_pth_power() for x in self.c
        )

    def pth_root(self):
        p = self.F.p
        return UPoly([x.pth_root() for x in self.c[::p]], self.F, self.var)

    def __call__(self, x):
        acc = None
        for a in reversed(self.c):
            acc = a + 0 * x if acc is None else acc * x + a
        return acc if acc is not None else 0 * x

    def gcd(self, other):
        return upoly_gcd(self, other)

    def substitute_scalar(self, t):
        """Rescale x -> t*x (t a constant of F_q(T))."""
        out = []
        power = as_ratfunc(1, self.F)
        for x in self.c:
            out.append(x * power)
            power = power * t
        return UPoly(out, self.F, self.var)

    def to_poly_coeffs(self):
        """(polys, scale): a primitive F_q[T]-coefficient multiple."""
        return _primitive(self)

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var=None, tvar="T"):
        var = var or self.var
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            s = a.to_str(tvar)
            if i == 0:
                parts.append(s)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if s == "1":
                parts.append(mono)
            else:
                if "+" in s[1:] or "/" in s:
                    s = f"({s})"
                parts.append(f"{s}{mono}")
        return "+".join(parts).replace("+-", "-")


def _content(polys):
    g = None
    for f in polys:
        if f:
            g = f if g is None else g.gcd(f)
            if g.is_one():
                break
    return g


def _primitive(f):
    """Return a list of Poly coefficients of f scaled to be primitive."""
    F = f.F
    den = Poly.one(F)
    for x in f.c:
        if not x.den.is_one():
            den = den.lcm(x.den)
    polys = [x.num * (den // x.den) for x in f.c]
    g = _content(polys)
    if g is not None and not g.is_one():
        polys = [x // g for x in polys]
    return polys


def _prem(a, b):
    """Pseudo-remainder of coefficient lists a by b over F_q[T], made
    primitive."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i in range(db + 1):
            if b[i]:
                r[shift + i] = r[shift + i] - c * b[i]
        while r and not r[-1]:
            r.pop()
        g = _content(r)
        if g is not None and not g.is_one():
            r = [x // g for x in r]
    return r


def upoly_gcd(f, g):
    """Monic gcd in F_q(T)[x] via primitive remainder sequences in F_q[T][x]."""
    F, var = f.F, f.var
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a, b = _primitive(f), _primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, r
    return UPoly([RatFunc.from_poly(x) for x in a], F, var).monic()


def radical(f):
    """Monic product of the distinct irreducible factors of f."""
    if not f:
        raise ValueError("radical of zero")
    f = f.monic()
    if f.deg <= 0:
        return UPoly([1], f.F, f.var)
    fx = f.derivative()
    fT = f.derivative_T()
    if not fx and not fT:
        # f = h^p
        return radical(f.pth_root())
    d = upoly_gcd(f, fx) if fx else f
    if fT:
        d = upoly_gcd(d, fT % d) if d.deg > 0 else d
    if d.deg <= 0:
        return f
    h = f.exact_div(d)  # square-free: each factor of f once or not at all
    rd = radical(d)
    common = upoly_gcd(h, rd)
    return (h * rd.exact_div(common)).monic()


def squarefree_part(f):
    """Alias for ``radical``: the monic radical of f."""
    return radical(f)


def squarefree_decomposition(f):
    """Pairwise coprime monic square-free S_k with f = lc * prod S_k^k.

    Returned as a list of (S_k, k) with S_k non-constant.
    """
    f = f.monic()
    if f.deg <= 0:
        return []
    layers = [radical(f)]
    rest = f.exact_div(layers[0])
    while rest.deg > 0:
        nxt = upoly_gcd(layers[-1], rest % layers[-1] if layers[-1].deg > 0 else rest)
        if nxt.deg <= 0:
            raise ArithmeticError("square-free layering failed to progress")
        rest = rest.exact_div(nxt)
        layers.append(nxt)
    out = []
    for k, r in enumerate(layers, start=1):
        nxt = layers[k] if k < len(layers) else None
        s = r if nxt is None else r.exact_div(nxt)
        if s.deg > 0:
            out.append((s.monic(), k))
    return out


def nonsquare_part(f):
    """Monic product of the irreducible factors occurring to an odd power;
    f equals lc(f) times this times a square."""
    out = UPoly([1], f.F, f.var)
    for s, k in squarefree_decomposition(f):
        if k % 2:
            out = out * s
    return out
