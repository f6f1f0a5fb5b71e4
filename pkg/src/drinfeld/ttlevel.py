"""Level T(T+1): the plane model of the genus-0 curve, its rational
parametrization, the numerator-denominator product of j, and the two
Weierstrass models of the genus-1 double cover.

All identities are checked exactly in F_q(T)[z] after clearing
denominators.
"""

from dataclasses import dataclass

from .algebra import Poly, RatFunc, UPoly, field, nonsquare_part, squarefree_kernel


def _setup(q):
    F = field(q)
    T = RatFunc.from_poly(Poly.gen(F))
    one = RatFunc.from_poly(Poly.one(F))
    return F, T, one


def _frob(f, q):
    """f(α)^q for f in F_q(T)[α]."""
    out = [0] * (q * max(f.deg, 0) + 1)
    for i, c in enumerate(f.c):
        out[q * i] = c.frobenius(1)
    return UPoly(out, f.F, f.var)


def _twisted_compose(outer, inner, q):
    """Coefficients of (sum a_i x^(q^i)) ∘ (sum b_k x^(q^k)); entries are
    UPolys in α."""
    out = {}
    for i, a in enumerate(outer):
        for k, b in enumerate(inner):
            bq = b
            for _ in range(i):
                bq = _frob(bq, q)
            term = a * bq
            out[i + k] = out[i + k] + term if i + k in out else term
    return [out[k] for k in sorted(out)]


@dataclass(frozen=True)
class CyclicRelation:
    """j = num(α)/den(α) on the curve of cyclic T-submodules."""

    j_num: UPoly
    j_den: UPoly
    checks: dict


def cyclic_t_relation(q):
    """Factor φ_T = Tx + x^q + j^(-1) x^(q^2) as (Tx + α' x^q) ∘ (x + α x^q)
    and derive j = -α^(q+1)/(α + T)."""
    F, T, one = _setup(q)
    alpha = UPoly([0, 1], F, "α")
    Tc = UPoly([T], F, "α")
    # matching the x^q coefficient forces α' = 1 - Tα
    alpha_t = UPoly([one], F, "α") - Tc * alpha
    comp = _twisted_compose([Tc, alpha_t], [UPoly([one], F, "α"), alpha], q)
    checks = {
        "x coefficient is T": comp[0] == Tc,
        "x^q coefficient is Tα + α' = 1": comp[1] == Tc * alpha + alpha_t and comp[1] == UPoly([one], F, "α"),
    }
    jinv = comp[2]  # (1 - αT) α^q
    checks["x^(q^2) coefficient is (1 - αT)α^q"] = jinv == (UPoly([one], F, "α") - alpha * Tc) * alpha**q
    # α -> -1/α: jinv(-1/α) α^(q+1) = -(α + T) after clearing
    d = jinv.deg
    cleared = UPoly([c * (-one) ** i for i, c in enumerate(jinv.c)][::-1], F, "α")  # α^d jinv(-1/α)
    cleared = cleared * alpha ** (q + 1 - d) if q + 1 >= d else cleared
    checks["after α -> -1/α: T + α + j^(-1) α^(q+1) = 0"] = Tc + alpha + cleared == UPoly([], F, "α")
    num = -(alpha ** (q + 1))
    den = alpha + Tc
    # spot check at α = T against the original form j^(-1) = (1 - αT) α^q
    a0 = T
    jinv0 = (one - a0 * T) * a0**q
    b0 = -one / a0  # α = -1/α_new, so α_new = -1/a0
    checks["spot check at α = T"] = num(b0) / den(b0) == jinv0.inverse()
    return CyclicRelation(num, den, checks)


@dataclass(frozen=True)
class Parametrization:
    q: int
    S: RatFunc
    N: UPoly  # shared numerator factor
    Dx: UPoly
    Dy: UPoly
    x_num: UPoly
    y_num: UPoly


def parametrization(q):
    """x(z) = -T N/Dx, y(z) = -(T+1) N/Dy with S = 1/(T+1)^q."""
    F, T, one = _setup(q)
    S = ((T + 1) ** q).inverse()
    z = UPoly([0, 1], F, "z")
    c = lambda a: UPoly([a], F, "z")  # noqa: E731
    N = z ** (q + 1) + z**q + c(S ** (q - 1)) * z + c(S**q)
    Dx = z ** (q + 1) + c(S) * z**q + c(S ** (q - 1)) * z + c(S**q)
    Dy = z ** (q + 1) + c(S ** (q - 1)) * z
    return Parametrization(q, S, N, Dx, Dy, c(-T) * N, c(-(T + 1)) * N)


def verify_parametrization(q):
    """x^(q+1)((T+1) + y) = y^(q+1)(T + x) after clearing denominators,
    plus the degree and coprimality checks on x(z)."""
    F, T, one = _setup(q)
    P = parametrization(q)
    c = lambda a: UPoly([a], F, "z")  # noqa: E731
    X, Y, Dx, Dy = P.x_num, P.y_num, P.Dx, P.Dy
    lhs = X ** (q + 1) * (c(T + 1) * Dy + Y) * Dy**q
    rhs = Y ** (q + 1) * (c(T) * Dx + X) * Dx**q
    return {
        "plane equation": lhs == rhs,
        "deg x_num = deg x_den = q+1": X.deg == q + 1 and Dx.deg == q + 1,
        "x_num, x_den coprime": X.gcd(Dx).deg == 0,
    }


@dataclass(frozen=True)
class ABProduct:
    a: UPoly
    b: UPoly
    product: UPoly
    expected: UPoly

    @property
    def holds(self):
        return self.product == self.expected

    def first_difference(self):
        diff = self.product - self.expected
        for i, x in enumerate(diff.c):
            if x:
                return i
        return None


def ab_product(q):
    """j(z) = -x^(q+1)/(T + x) = a/b in lowest terms with b monic; returns
    a·b alongside the closed product form."""
    F, T, one = _setup(q)
    P = parametrization(q)
    c = lambda a: UPoly([a], F, "z")  # noqa: E731
    X, Dx = P.x_num, P.Dx
    a = -(X ** (q + 1))
    b = Dx**q * (c(T) * Dx + X)
    g = a.gcd(b)
    if g.deg > 0:
        a, b = a.exact_div(g), b.exact_div(g)
    lc = b.lc
    a, b = a * c(lc.inverse()), b * c(lc.inverse())
    z = UPoly([0, 1], F, "z")
    S = P.S
    u = ((T + 1) ** (q - 1)).inverse()
    expected = (
        c(T**q + 1) * z**q * (z + c(S)) ** q * (z + c(u)) ** (q * q) * P.N ** (q + 1)
    )
    return ABProduct(a, b, a * b, expected)


@dataclass(frozen=True)
class CubicModel:
    """y^2 = x (x + r1)(x + r2)."""

    cubic: UPoly

    def equation(self, var="x"):
        return f"y^2 = {self.cubic.to_str(var)}"

    def curve(self):
        from .elliptic import WeierstrassCurve

        f = self.cubic
        return WeierstrassCurve.from_coeffs(0, f.coeff(2), 0, f.coeff(1), f.coeff(0), F=f.F)


def _square_class(r):
    """Monic squarefree kernel of num·den and the F_q-unit left over, so
    r = unit · kernel · square."""
    F = r.F
    num, den = r.num, r.den
    unit = num.lc
    kern = squarefree_kernel(num.monic() * den)
    return unit, kern


def weierstrass_models(q):
    """(E1, E2, info): E1 drops every constant of a·b, E2 keeps the square
    class k of the constant and rescales x -> x/k, y -> y/k."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    F, T, one = _setup(q)
    ab = ab_product(q)
    cubic = nonsquare_part(ab.product)
    if cubic.deg != 3:
        raise ArithmeticError(f"odd-multiplicity part has degree {cubic.deg}")
    unit, kern = _square_class(ab.product.lc)
    k = RatFunc.from_poly(kern)
    # k^3 h(x/k): scale the roots by k
    scaled = UPoly([cubic.coeff(i) * k ** (3 - i) for i in range(4)], F, "z")
    info = {"constant": ab.product.lc, "unit": unit, "kernel": kern}
    return CubicModel(cubic), CubicModel(scaled), info


def expected_models(q):
    """The closed forms of the two models, for comparison."""
    F, T, one = _setup(q)
    z = UPoly([0, 1], F, "z")
    c = lambda a: UPoly([a], F, "z")  # noqa: E731
    e1 = z * (z + c(((T + 1) ** q).inverse())) * (z + c(((T + 1) ** (q - 1)).inverse()))
    e2 = z * (z + c(((T + 1) ** (q - 1)).inverse())) * (z + c(((T + 1) ** (q - 2)).inverse()))
    return e1, e2


def split_roots(n):
    """(a, b) with n = (T - a)(T - b), a < b, for two distinct degree-1 primes."""
    F = n.F
    if n.deg != 2 or not n.is_monic():
        raise ValueError(f"{n} is not a monic quadratic")
    roots = sorted(n.roots())
    if len(roots) != 2:
        raise ValueError(f"{n} is not a product of two distinct degree-1 primes")
    return roots[0], roots[1]


def models_for_level(n):
    """Both models for n = (T - a)(T - b), pulled back from T(T+1) along
    T -> (T - a)/(a - b), which carries T(T+1) to n/(a - b)^2."""
    F = n.F
    a, b = split_roots(n)
    E1, E2, _ = weierstrass_models(F.q)
    T = RatFunc.from_poly(Poly.gen(F))
    sub = (T - RatFunc.from_poly(Poly.const(F, a))) / RatFunc.from_poly(Poly.const(F, F.sub(a, b)))
    pull = lambda m: CubicModel(UPoly([c.substitute(sub) for c in m.cubic.c], F, m.cubic.var))  # noqa: E731
    return pull(E1), pull(E2)
