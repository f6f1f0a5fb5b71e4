"""Weierstrass curves over F_q(T), Tate's algorithm at every place, and
conductors.

Places are either a monic irreducible P of F_q[T] or the infinite place
(valuation deg(den) - deg(num), uniformizer 1/T).  Tate's algorithm
follows the classical layout (Silverman, Advanced Topics IV.9; Cremona's
formulation) and handles residue characteristics 2 and 3.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import Poly, RatFunc, as_ratfunc, factorize

INF = float("inf")


# places ---------------------------------------------------------------------


class FinitePlace:
    def __init__(self, prime):
        if not prime.is_monic() or prime.deg < 1:
            raise ValueError("a place needs a monic non-constant prime")
        self.prime = prime
        self.F = prime.F
        self.pi = RatFunc.from_poly(prime)
        self.degree = prime.deg

    @property
    def char(self):
        return self.F.p

    def __repr__(self):
        return str(self.prime)

    def __eq__(self, other):
        return isinstance(other, FinitePlace) and self.prime == other.prime

    def __hash__(self):
        return hash(self.prime)

    def val(self, x):
        return x.valuation(self.prime)

    def reduce(self, x):
        """Residue of an integral x as a polynomial of degree < deg P."""
        P = self.prime
        if self.val(x) < 0:
            raise ValueError(f"{x} is not integral at {P}")
        return (x.num % P) * x.den.invmod(P) % P

    def lift(self, r):
        return RatFunc.from_poly(r)

    def residues(self):
        F = self.F
        for cs in product(range(F.q), repeat=self.degree):
            yield Poly(F, cs)

    def inv(self, x):
        return RatFunc.from_poly(self.reduce(x).invmod(self.prime))


class InfinitePlace:
    def __init__(self, F):
        self.F = F
        self.pi = RatFunc(Poly.one(F), Poly.gen(F))
        self.degree = 1

    @property
    def char(self):
        return self.F.p

    def __repr__(self):
        return "∞"

    def __eq__(self, other):
        return isinstance(other, InfinitePlace) and self.F == other.F

    def __hash__(self):
        return hash(("inf", self.F.q))

    def val(self, x):
        return x.valuation_inf()

    def reduce(self, x):
        v = self.val(x)
        if v < 0:
            raise ValueError(f"{x} is not integral at ∞")
        if v > 0:
            return Poly.zero(self.F)
        F = self.F
        return Poly.const(F, F.div(x.num.lc, x.den.lc))

    def lift(self, r):
        return RatFunc.from_poly(r)

    def residues(self):
        F = self.F
        for a in F.elements():
            yield Poly.const(F, a)

    def inv(self, x):
        r = self.reduce(x)
        return RatFunc.from_poly(Poly.const(self.F, self.F.inv(r.lc)))


def place(F, where):
    """'inf'/'∞' or a prime polynomial."""
    if isinstance(where, str) and where in ("inf", "∞", "oo"):
        return InfinitePlace(F)
    return FinitePlace(where)


# curves ---------------------------------------------------------------------


class SingularCurveError(ArithmeticError):
    pass


class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q(T)."""

    __slots__ = ("F", "a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1, a2, a3, a4, a6, F):
        self.F = F
        self.a1, self.a2, self.a3, self.a4, self.a6 = (as_ratfunc(x, F) for x in (a1, a2, a3, a4, a6))

    @classmethod
    def from_coeffs(cls, a1, a2, a3, a4, a6, F):
        E = cls(a1, a2, a3, a4, a6, F)
        if not E.discriminant:
            raise SingularCurveError(f"singular curve {E}")
        return E

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + a2 * 4
        b4 = a4 * 2 + a1 * a3
        b6 = a3 * a3 + a6 * 4
        b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants
        c4 = b2 * b2 - b4 * 24
        c6 = -(b2 * b2 * b2) + b2 * b4 * 36 - b6 * 216
        return c4, c6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return -(b2 * b2 * b8) - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    @property
    def j_invariant(self):
        c4, _ = self.c_invariants
        return c4 * c4 * c4 / self.discriminant

    def is_isotrivial(self):
        j = self.j_invariant
        return j.num.deg <= 0 and j.den.deg <= 0

    def rst(self, r, s, t):
        """x = x' + r, y = y' + s x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        r, s, t = (as_ratfunc(x, self.F) for x in (r, s, t))
        return WeierstrassCurve(
            a1 + s * 2,
            a2 - s * a1 + r * 3 - s * s,
            a3 + r * a1 + t * 2,
            a4 - s * a3 + r * a2 * 2 - (t + r * s) * a1 + r * r * 3 - s * t * 2,
            a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
            self.F,
        )

    def scale(self, u):
        """x = u^2 x', y = u^3 y': a_i -> a_i / u^i."""
        u = as_ratfunc(u, self.F)
        a1, a2, a3, a4, a6 = self.ainvs
        return WeierstrassCurve(a1 / u, a2 / u**2, a3 / u**3, a4 / u**4, a6 / u**6, self.F)

    def change(self, u, r, s, t):
        return self.rst(r, s, t).scale(u)

    def __repr__(self):
        return f"WeierstrassCurve({self})"

    def __str__(self):
        a1, a2, a3, a4, a6 = self.ainvs
        lhs = "y^2"
        for c, m in ((a1, "xy"), (a3, "y")):
            if c:
                lhs += f" + {_coef(c)}{m}"
        rhs = "x^3"
        for c, m in ((a2, "x^2"), (a4, "x"), (a6, "")):
            if c:
                rhs += f" + {_coef(c)}{m}" if m else f" + {c}"
        return f"{lhs} = {rhs}"

    def as_dict(self):
        return {k: str(v) for k, v in zip(("a1", "a2", "a3", "a4", "a6"), self.ainvs)}


def _coef(c):
    s = str(c)
    if s == "1":
        return ""
    return f"({s})" if ("+" in s or "/" in s or "-" in s[1:]) else s


def curve_invariants(E):
    c4, c6 = E.c_invariants
    D = E.discriminant
    if not D:
        raise SingularCurveError("singular curve")
    return c4, c6, D, c4 * c4 * c4 / D


# Tate's algorithm ------------------------------------------------------------


@dataclass(frozen=True)
class LocalData:
    place: object
    kodaira: str
    conductor_exponent: int
    tamagawa: int
    disc_valuation: int
    minimal_model: WeierstrassCurve = dc_field(compare=False, repr=False)
    split: object = None

    def as_dict(self):
        return {
            "place": str(self.place),
            "kodaira": self.kodaira,
            "conductor_exponent": self.conductor_exponent,
            "tamagawa": self.tamagawa,
            "disc_valuation": self.disc_valuation,
            "split": self.split,
        }


class _ResidueField:
    """k = F_q[T]/(P) (P = T at ∞, where residues are constants); elements
    are polynomials reduced mod P, polynomials over k are lists of them."""

    def __init__(self, place):
        self.place = place
        F = place.F
        self.F = F
        self.mod = place.prime if isinstance(place, FinitePlace) else Poly.gen(F)
        self.size = F.q**place.degree
        self.zero, self.one = Poly.zero(F), Poly.one(F)

    def el(self, x):
        return self.place.reduce(x)

    def mul(self, a, b):
        return (a * b) % self.mod

    def inv(self, a):
        return a.invmod(self.mod)

    def pow(self, a, e):
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    # polynomials over k, lowest coefficient first

    def _trim(self, f):
        f = list(f)
        while f and not f[-1]:
            f.pop()
        return f

    def _pmul(self, f, g):
        out = [self.zero] * (len(f) + len(g) - 1) if f and g else []
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] = (out[i + j] + a * b) % self.mod
        return self._trim(out)

    def _prem(self, f, g):
        f = self._trim(f)
        lead = self.inv(g[-1])
        while len(f) >= len(g):
            c = self.mul(f[-1], lead)
            shift = len(f) - len(g)
            for i, b in enumerate(g):
                f[shift + i] = (f[shift + i] - c * b) % self.mod
            f = self._trim(f)
        return f

    def _pgcd(self, f, g):
        f, g = self._trim(f), self._trim(g)
        while g:
            f, g = g, self._prem(f, g)
        return f

    def count_roots(self, coeffs):
        """Number of distinct roots in k of sum coeffs[i] X^i."""
        f = self._trim(self.el(c) for c in coeffs)
        if len(f) <= 1:
            raise ValueError("constant polynomial")
        # X^|k| mod f by square-and-multiply
        x, acc, e = [self.zero, self.one], [self.one], self.size
        x = self._prem(x, f)
        while e:
            if e & 1:
                acc = self._prem(self._pmul(acc, x), f)
            x = self._prem(self._pmul(x, x), f)
            e >>= 1
        acc = acc + [self.zero] * (2 - len(acc))
        acc[1] = (acc[1] - self.one) % self.mod
        return len(self._pgcd(f, acc)) - 1

    def pth_root(self, a):
        """The unique p-th root (k is perfect): a^(|k|/p)."""
        return self.pow(self.el(a), self.size // self.F.p)


def _root(place, x, n):
    """Lift of the n-th root of x in the residue field, n the characteristic."""
    if n != place.char:
        raise ValueError("only p-th roots are needed in residue characteristic p")
    return place.lift(_ResidueField(place).pth_root(x))


def _has_quad_root(place, a, b, c):
    """Whether a X^2 + b X + c has a root in the residue field."""
    zero = lambda v: place.val(v) > 0  # noqa: E731
    if zero(a):
        return (not zero(b)) or zero(c)
    return _ResidueField(place).count_roots((c, b, a)) > 0


def _cubic_roots(place, b, c, d):
    return _ResidueField(place).count_roots((d, c, b, as_ratfunc(1, place.F)))


def _integral(E, place):
    """Scale by a power of the uniformizer until every a_i is integral."""
    k = 0
    for i, a in zip((1, 2, 3, 4, 6), E.ainvs):
        if a:
            v = place.val(a)
            if v < 0:
                k = max(k, -(v // i))
    if k:
        E = E.scale(place.pi ** (-k))
    return E


def tate_local(E, pl, max_rounds=64):
    """Local reduction data of E at the place ``pl``."""
    if not E.discriminant:
        raise SingularCurveError("singular curve")
    p = pl.char
    pi = pl.pi
    pi2 = pi * pi
    val = pl.val
    div = lambda x: val(x) > 0  # noqa: E731
    red = lambda x: pl.lift(pl.reduce(x))  # noqa: E731
    pinv = pl.inv
    half = None if p == 2 else pinv(as_ratfunc(2, E.F))
    C = _integral(E, pl)
    for _ in range(max_rounds):
        a1, a2, a3, a4, a6 = C.ainvs
        b2, b4, b6, b8 = C.b_invariants
        c4, c6 = C.c_invariants
        vd = val(C.discriminant)
        if vd == 0:
            return LocalData(pl, "I0", 0, 1, 0, C)
        # move a singular point of the reduction to (0, 0)
        if p == 2:
            if div(b2):
                r = _root(pl, a4, 2)
                t = _root(pl, ((r + a2) * r + a4) * r + a6, 2)
            else:
                inv = pinv(a1)
                r = inv * a3
                t = inv * (a4 + r * r)
        elif p == 3:
            r = _root(pl, -b6, 3) if div(b2) else -pinv(b2) * b4
            t = a1 * r + a3
        else:
            if div(c4):
                r = -pinv(as_ratfunc(12, E.F)) * b2
            else:
                r = -pinv(c4 * 12) * (c6 + b2 * c4)
            t = -half * (a1 * r + a3)
        C = C.rst(red(r), 0, red(t))
        a1, a2, a3, a4, a6 = C.ainvs
        b2, b4, b6, b8 = C.b_invariants
        if not div(b2):
            split = _has_quad_root(pl, as_ratfunc(1, E.F), a1, -a2)
            if split:
                c = vd
            else:
                c = 2 if vd % 2 == 0 else 1
            return LocalData(pl, f"I{vd}", 1, c, vd, C, split)
        if val(a6) < 2:
            return LocalData(pl, "II", vd, 1, vd, C)
        if val(b8) < 3:
            return LocalData(pl, "III", vd - 1, 2, vd, C)
        if val(b6) < 3:
            c = 3 if _has_quad_root(pl, as_ratfunc(1, E.F), a3 / pi, -a6 / pi2) else 1
            return LocalData(pl, "IV", vd - 2, c, vd, C)
        # now p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s = _root(pl, a2, 2)
            t = pi * _root(pl, a6 / pi2, 2)
        elif p == 3:
            s, t = a1, a3
        else:
            s, t = -a1 * half, -a3 * half
        C = C.rst(0, s, t)
        a1, a2, a3, a4, a6 = C.ainvs
        b = a2 / pi
        c = a4 / pi2
        d = a6 / (pi * pi2)
        w = d * d * 27 - b * b * c * c + b * b * b * d * 4 - b * c * d * 18 + c * c * c * 4
        x = c * 3 - b * b
        sw = (3 if div(x) else 2) if div(w) else 1
        if sw == 1:
            return LocalData(pl, "I0*", vd - 4, 1 + _cubic_roots(pl, b, c, d), vd, C)
        if sw == 2:
            # double root of the cubic moved to 0
            if p == 2:
                r = _root(pl, c, 2)
            elif p == 3:
                r = c * pinv(b)
            else:
                r = (b * c - d * 9) * pinv(x * 2)
            C = C.rst(pi * red(r), 0, 0)
            a1, a2, a3, a4, a6 = C.ainvs
            ix, iy = 3, 3
            mx = my = pi2
            while True:
                a2t = a2 / pi
                a3t = a3 / my
                a4t = a4 / (pi * mx)
                a6t = a6 / (mx * my)
                if div(a3t * a3t + a6t * 4):
                    t = my * (_root(pl, a6t, 2) if p == 2 else red(-a3t * half))
                    C = C.rst(0, 0, t)
                    a1, a2, a3, a4, a6 = C.ainvs
                    my = my * pi
                    iy += 1
                    a2t = a2 / pi
                    a3t = a3 / my
                    a4t = a4 / (pi * mx)
                    a6t = a6 / (mx * my)
                    if div(a4t * a4t - a6t * a2t * 4):
                        if p == 2:
                            r = mx * _root(pl, a6t * pinv(a2t), 2)
                        else:
                            r = mx * red(-a4t * pinv(a2t * 2))
                        C = C.rst(r, 0, 0)
                        a1, a2, a3, a4, a6 = C.ainvs
                        mx = mx * pi
                        ix += 1
                    else:
                        cp = 4 if _has_quad_root(pl, a2t, a4t, a6t) else 2
                        break
                else:
                    cp = 4 if _has_quad_root(pl, as_ratfunc(1, E.F), a3t, -a6t) else 2
                    break
            n = ix + iy - 5
            return LocalData(pl, f"I{n}*", vd - ix - iy + 1, cp, vd, C)
        # triple root moved to 0
        if p == 2:
            r = b
        elif p == 3:
            r = _root(pl, -d, 3)
        else:
            r = -b * pinv(as_ratfunc(3, E.F))
        C = C.rst(pi * red(r), 0, 0)
        a1, a2, a3, a4, a6 = C.ainvs
        x3 = a3 / pi2
        x6 = a6 / (pi2 * pi2)
        if not div(x3 * x3 + x6 * 4):
            cp = 3 if _has_quad_root(pl, as_ratfunc(1, E.F), x3, -x6) else 1
            return LocalData(pl, "IV*", vd - 6, cp, vd, C)
        t = -pi2 * _root(pl, x6, 2) if p == 2 else pi2 * red(-x3 * half)
        C = C.rst(0, 0, t)
        a1, a2, a3, a4, a6 = C.ainvs
        if val(a4) < 4:
            return LocalData(pl, "III*", vd - 7, 2, vd, C)
        if val(a6) < 6:
            return LocalData(pl, "II*", vd - 8, 1, vd, C)
        # not minimal
        C = C.scale(pi)
    raise RuntimeError("Tate's algorithm did not terminate")


# standard discriminant valuation of each type in the tame case
def kodaira_disc_valuation(kodaira):
    fixed = {"I0": 0, "II": 2, "III": 3, "IV": 4, "I0*": 6, "IV*": 8, "III*": 9, "II*": 10}
    if kodaira in fixed:
        return fixed[kodaira]
    if kodaira.endswith("*"):
        return int(kodaira[1:-1]) + 6
    return int(kodaira[1:])


def candidate_places(E):
    """Finite primes where E can have bad reduction, plus ∞."""
    primes = set()
    D = E.discriminant
    for x in [D] + [a for a in E.ainvs if a]:
        for f in (x.num, x.den):
            if f.deg > 0:
                primes.update(p for p, _ in factorize(f))
    places = [FinitePlace(p) for p in sorted(primes, key=Poly.sort_key)]
    places.append(InfinitePlace(E.F))
    return places


@dataclass(frozen=True)
class Conductor:
    local: tuple  # LocalData at each bad place

    @property
    def exponents(self):
        return {str(ld.place): ld.conductor_exponent for ld in self.local}

    @property
    def degree(self):
        return sum(ld.conductor_exponent * ld.place.degree for ld in self.local)

    def __str__(self):
        parts = []
        for ld in self.local:
            name = str(ld.place)
            if "+" in name:
                name = f"({name})"
            f = ld.conductor_exponent
            parts.append(name if f == 1 else f"{name}^{f}")
        return "·".join(parts) or "1"


def conductor(E, require_nonisotrivial=True):
    if require_nonisotrivial and E.is_isotrivial():
        raise ValueError("isotrivial curve: the conductor degree bound does not apply")
    bad = []
    for pl in candidate_places(E):
        ld = tate_local(E, pl)
        if ld.conductor_exponent:
            bad.append(ld)
    return Conductor(tuple(bad))


def invert_variable(x):
    """x(1/U) written again as a function of the same variable."""
    if not x:
        return x
    num, den = x.num, x.den
    dn, dd = num.deg, den.deg
    F = x.F
    rn = Poly(F, tuple(reversed(num.c))) if num else num
    rd = Poly(F, tuple(reversed(den.c)))
    U = Poly.gen(F)
    if dd >= dn:
        return RatFunc(rn * U ** (dd - dn), rd)
    return RatFunc(rn, rd * U ** (dn - dd))


def at_infinity_by_substitution(E):
    """Local data at ∞ computed as the place U of the curve in U = 1/T."""
    Ei = WeierstrassCurve(*(invert_variable(a) for a in E.ainvs), F=E.F)
    return tate_local(Ei, FinitePlace(Poly.gen(E.F)))


def base_extend(E, F2):
    """E over F2(T) for F_q contained in F2 as its prime field."""
    if not E.F.is_prime:
        raise ValueError("base extension implemented from prime fields only")
    lift = lambda f: Poly(F2, f.c)  # noqa: E731
    return WeierstrassCurve(*(RatFunc(lift(a.num), lift(a.den)) for a in E.ainvs), F=F2)


def extremal_type_check(E, p):
    """Types at the two places over p (after splitting p over F_(q^2)) and
    at ∞; True when they are (I2, I2, I2*)."""
    from .algebra import field

    q = E.F.q
    F2 = field(q * q)
    E2 = base_extend(E, F2)
    P2 = Poly(F2, p.c)
    roots = P2.roots()
    if len(roots) != 2:
        raise ValueError(f"{p} does not split into two linear factors over F_{q * q}")
    types = []
    for r in roots:
        lin = Poly.gen(F2) - Poly.const(F2, r)
        types.append(tate_local(E2, FinitePlace(lin)).kodaira)
    types.append(tate_local(E2, InfinitePlace(F2)).kodaira)
    return tuple(types) == ("I2", "I2", "I2*"), tuple(types)


def x01_curve(p):
    """y^2 = x(x^2 + (2T + a)x + p) for p = T^2 + aT + b."""
    F = p.F
    T = Poly.gen(F)
    a = Poly.const(F, p.coeff(1))
    return WeierstrassCurve.from_coeffs(0, T.scale(2) + a, 0, p, 0, F=F)
