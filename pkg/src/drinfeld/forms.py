"""Expansions at infinity of Drinfeld modular forms for GL_2(A).

Everything is normalized so that pi_C disappears: the forms Δ, g, j and
the level-p quotient η are stored as series in t or s = t^(q-1) with
coefficients in F_q[T].  The key ingredients are

* the Carlitz module ρ and the inverse cyclotomic polynomials
  θ_a(t) = ρ_a(1/t) t^|a|,
* the product Δ = -t^(q-1) prod_{a monic} θ_a^((q^2-1)(q-1)),
* t_p = t^|p| / θ_p(t) and Δ_p = Δ(t_p),
* g = 1 - [1] sum_{a monic} s^|a| θ_a^(1-q), with [1] = T^q - T,
* j = g^(q+1) / Δ and η = (Δ/Δ_p)^(1/(q^2-1)).

Since θ_a ≡ 1 mod s^(q^(deg a - 1)), a truncated product is exact up to
the requested precision.  Frobenius twists x -> x^(q^k) are cheap on
F_q[T]-coefficients, so the exponent (q^2-1)(q-1) = q^3 - q^2 - q + 1 is
applied as P^(q^3) P / (P^(q^2) P^q).
"""

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Poly, PrecisionError, RatFunc, Series, UPoly, field, monic_polys, nonsquare_part

DEFAULT_MARGIN = 4


class AdditivePoly:
    """sum_i c_i x^(q^i) with coefficients in F_q[T]."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.F = F
        self.c = tuple(cs)

    @property
    def q_degree(self):
        return len(self.c) - 1

    def __eq__(self, other):
        return isinstance(other, AdditivePoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        zero = Poly.zero(self.F)
        return AdditivePoly(self.F, [x + (b[i] if i < len(b) else zero) for i, x in enumerate(a)])

    def scale(self, a):
        return AdditivePoly(self.F, [a * x for x in self.c])

    def compose(self, other):
        """(self ∘ other)(x) = self(other(x))."""
        zero = Poly.zero(self.F)
        out = [zero] * (len(self.c) + len(other.c) - 1) if self.c and other.c else []
        for i, f in enumerate(self.c):
            if not f:
                continue
            for j, g in enumerate(other.c):
                if g:
                    out[i + j] = out[i + j] + f * g.frobenius(i)
        return AdditivePoly(self.F, out)

    def __call__(self, x):
        """Evaluate at a ring element x with F_q[T] scalars."""
        q = self.F.q
        acc = 0 * x
        power = x
        for i, c in enumerate(self.c):
            if i:
                power = power**q
            if c:
                acc = acc + power * c
        return acc

    def __repr__(self):
        return f"AdditivePoly({self})"

    def __str__(self):
        q = self.F.q
        parts = []
        for i, c in enumerate(self.c):
            if not c:
                continue
            mono = "x" if i == 0 else f"x^{q**i}"
            s = str(c)
            parts.append(mono if s == "1" else (f"({s}){mono}" if "+" in s else f"{s}{mono}"))
        return "+".join(parts) or "0"


def carlitz(a):
    """ρ_a, determined by ρ_T = Tx + x^q."""
    F = a.F
    T = Poly.gen(F)
    rho_T = AdditivePoly(F, [T, Poly.one(F)])
    out = AdditivePoly(F, [])
    power = AdditivePoly(F, [Poly.one(F)])
    for k, c in enumerate(a.c):
        if k:
            power = rho_T.compose(power)
        if c:
            out = out + power.scale(Poly.const(F, c))
    return out


def theta_terms(a):
    """{exponent of t: coefficient} of θ_a."""
    if not a:
        raise ValueError("θ_0 is undefined")
    q = a.F.q
    size = a.norm()
    return {size - q**i: c for i, c in enumerate(carlitz(a).c) if c}


def theta(a, prec=None, var="t"):
    """θ_a as a t-series, exact below ``prec`` (default: its degree + 1)."""
    terms = theta_terms(a)
    if prec is None:
        prec = max(terms) + 1
    return Series.from_dict(terms, prec, Poly.zero(a.F), var)


def theta_s(a, prec):
    """θ_a in s = t^(q-1); all t-exponents are multiples of q - 1."""
    q = a.F.q
    terms = {e // (q - 1): c for e, c in theta_terms(a).items()}
    return Series.from_dict(terms, prec, Poly.zero(a.F), "s")


def s_to_t(series, q):
    """Re-index an s-series as a t-series (t-exponents times q - 1)."""
    k = q - 1
    terms = {k * e: c for e, c in series.terms()}
    return Series.from_dict(terms, k * series.prec, series.zero, "t")


def t_to_s(series, q):
    k = q - 1
    terms = {}
    for e, c in series.terms():
        if e % k:
            raise ValueError(f"t^{e} is not a power of s")
        terms[e // k] = c
    prec = -((-series.prec) // k)
    return Series.from_dict(terms, prec, series.zero, "s")


def _frob_quotient(P, q, prec):
    """P^((q^2-1)(q-1)) for a unit series P (val 0) with F_q[T] coefficients."""
    num = P.frobenius(3, q, cap=prec) * P
    den = P.frobenius(2, q, cap=prec) * P.frobenius(1, q, cap=prec)
    return num / den


@lru_cache(maxsize=32)
def delta_s(q, prec):
    """Normalized Δ as an s-series, exact for exponents < prec."""
    if prec < 2:
        raise ValueError("Δ needs precision at least 2")
    F = field(q)
    m = prec - 1
    P = Series.one(m, Poly.zero(F), "s")
    d = 1
    # θ_a ≡ 1 mod s^(q^(d-1)) for deg a = d
    while q ** (d - 1) < m:
        for a in monic_polys(q, d):
            P = theta_s(a, m) * P
        d += 1
    return -_frob_quotient(P, q, m).shift(1)


def delta_expansion(q, N):
    """Δ as a t-series, exact for t-exponents < N."""
    k = q - 1
    return s_to_t(delta_s(q, max(2, -(-N // k))), q).truncate(N)


def delta_coefficients(q, N):
    """{i: δ_i} for 1 <= i <= N, Δ = sum δ_i t^((q-1) i)."""
    D = delta_s(q, N + 1)
    return {i: D[i] for i in range(1, N + 1)}


def t_p_expansion(p, N):
    """t_p = t^|p| / θ_p(t), exact for t-exponents < N."""
    size = p.norm()
    rel = max(1, N - size)
    return theta(p, rel).inverse().shift(size).truncate(N)


def s_p_expansion(p, prec):
    """t_p^(q-1) = s^|p| θ_p(s)^(1-q), exact for s-exponents < prec."""
    q = p.F.q
    size = p.norm()
    rel = max(1, prec - size)
    th = theta_s(p, rel)
    return (th * th.frobenius(1, q, cap=rel).inverse()).shift(size)


def delta_p_s(p, prec):
    """Δ_p = Δ(t_p) in s, exact for exponents < prec."""
    q = p.F.q
    size = p.norm()
    k = 2 + max(0, prec - size) // size
    return delta_s(q, max(2, k)).substitute(s_p_expansion(p, prec)).truncate(prec)


@dataclass(frozen=True)
class NormalizedExpansion:
    """A series with the power of pi_C that was divided out."""

    name: str
    series: Series
    pi_exponent: int

    def __getitem__(self, k):
        return self.series[k]

    def __str__(self):
        return f"{self.name} = {self.series}"


def _require_quadratic(p):
    if p.deg != 2 or not p.is_monic() or not p.is_irreducible():
        raise ValueError(f"{p} is not a monic irreducible quadratic")


@lru_cache(maxsize=32)
def _eta(p, rel):
    q = p.F.q
    size = p.norm()
    D = delta_s(q, rel + 1)
    Dp = delta_p_s(p, size + rel)
    return (D / Dp).nth_root(size - 1, Poly.one(p.F))


def eta_expansion(p, rel):
    """η with leading term s^(-1), known to relative precision rel (so
    exact for s-exponents < rel - 1)."""
    _require_quadratic(p)
    return _eta(p, rel)


@lru_cache(maxsize=32)
def g_expansion(q, prec):
    """Normalized g in s, exact for exponents < prec."""
    F = field(q)
    zero = Poly.zero(F)
    T = Poly.gen(F)
    total = Series((), prec, prec, zero, "s")
    d = 0
    while q**d < prec:
        size = q**d
        for a in monic_polys(q, d):
            rel = prec - size
            th = theta_s(a, rel)
            total = total + (th * th.frobenius(1, q, cap=rel).inverse()).shift(size)
        d += 1
    return 1 - total.scale(T**q - T)


@lru_cache(maxsize=32)
def j_expansion(q, rel):
    """j = g^(q+1)/Δ with leading term -s^(-1), relative precision rel."""
    g = g_expansion(q, rel)
    return g ** (q + 1) / delta_s(q, rel + 1)


@dataclass(frozen=True)
class FSolution:
    p: Poly
    f: UPoly
    margin: int
    residual_checked: tuple


def solve_f(p, margin=DEFAULT_MARGIN):
    """The f of degree q^2 + 1 with j η^(q^2) = f(η).

    The coefficients of s^-(q^2+1), ..., s^0 of j η^(q^2) determine f by a
    triangular solve (η^k starts with s^-k); the next ``margin``
    coefficients must then vanish identically.
    """
    _require_quadratic(p)
    F = p.F
    q = F.q
    Q = q * q
    rel = Q + margin + 2
    eta = eta_expansion(p, rel)
    j = j_expansion(q, rel)
    lhs = j * eta.frobenius(2, q)
    top = margin + 1
    if lhs.prec < top:
        raise PrecisionError(f"j·η^{Q} known only below s^{lhs.prec}", lhs.prec)
    # η^k has precision rel - k; truncating inside the chain would lose one
    # more exponent per step
    chain = Series.one(rel, Poly.zero(F), "s")
    powers = [chain.truncate(top)]
    for _ in range(Q + 1):
        chain = chain * eta
        powers.append(chain.truncate(top))
    coeffs = [None] * (Q + 2)
    resid = lhs.truncate(top)
    for k in range(Q + 1, -1, -1):
        c = resid[-k]
        coeffs[k] = c
        if c:
            resid = resid - powers[k].scale(c)
    bad = [(e, resid[e]) for e in range(-(Q + 1), top) if resid[e]]
    if bad:
        e, c = bad[0]
        raise ArithmeticError(
            f"interpolation inconsistent at s^{e} (coefficient {c}); precision too low"
        )
    f = UPoly([RatFunc.from_poly(c) for c in coeffs], F, "x")
    return FSolution(p, f, margin, tuple(range(1, top)))


@dataclass(frozen=True)
class ModelFromF:
    f2: UPoly
    unit: object

    @property
    def a2(self):
        return self.f2.coeff(1)

    @property
    def a4(self):
        return self.f2.coeff(0)

    def equation(self):
        return f"y^2 = x({self.f2.to_str()})"

    def curve(self):
        from .elliptic import WeierstrassCurve

        return WeierstrassCurve.from_coeffs(0, self.a2, 0, self.a4, 0, F=self.f2.F)


def weierstrass_from_f(f):
    """y^2 = x f2(x) with f2 the odd-multiplicity part of f; the constant
    unit of f is dropped."""
    if f.F.q % 2 == 0:
        raise ValueError("the Weierstrass extraction assumes q odd")
    f2 = nonsquare_part(f)
    if f2.deg != 2:
        raise ArithmeticError(f"odd-multiplicity part {f2} is not quadratic")
    if not f2.coeff(0):
        raise ArithmeticError("odd-multiplicity part is divisible by x")
    return ModelFromF(f2, f.lc)


def x0_equation(p, margin=DEFAULT_MARGIN):
    """(f, model): the level-p relation and the model y^2 = x f2(x)."""
    sol = solve_f(p, margin)
    return sol, weierstrass_from_f(sol.f)


def remark_pattern(f, f2):
    """The b_i of -f/f2 = (x^(q-1) + b_(q-2) p x^(q-2) + ... + b_0 p^(q-1))^(q+1),
    with p = f2(0).  Returns [b_0, ..., b_(q-2)]."""
    F = f.F
    q = F.q
    h = (-f).exact_div(f2)
    D = h.deg
    if D != q * q - 1:
        raise ArithmeticError("unexpected degree of -f/f2")
    # (q+1)-th root through the reversed series in u = 1/x
    zero = RatFunc.from_poly(Poly.zero(F))
    rev = Series([h.coeff(D - k) for k in range(D + 1)], 0, D + 1, zero, "u")
    root = rev.nth_root(q + 1, RatFunc.from_poly(Poly.one(F)))
    r = UPoly([root[q - 1 - i] for i in range(q)], F, "x")
    if r ** (q + 1) != h:
        raise ArithmeticError("-f/f2 is not a (q+1)-th power")
    p = f2.coeff(0)
    return [r.coeff(i) / p ** (q - 1 - i) for i in range(q - 1)]
