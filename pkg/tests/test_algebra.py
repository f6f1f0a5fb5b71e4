import pytest
import sympy

from drinfeld._kernels import BACKEND
from drinfeld._kernels import _pykernels
from drinfeld.algebra import (
    GF,
    NonUnitError,
    ParseError,
    Poly,
    PrecisionError,
    RatFunc,
    Residue,
    Series,
    UPoly,
    crt_join,
    crt_split,
    factorize,
    field,
    irreducible_monic,
    is_prime,
    monic_polys,
    nonsquare_part,
    parse_poly,
    prime_power,
    radical,
    squarefree_kernel,
    squarefree_part,
)

X = sympy.Symbol("X")


def P(text, q=3):
    return parse_poly(text, q)


def to_sympy(f):
    return sympy.Poly(list(reversed(f.c)) or [0], X, modulus=f.F.p)


def from_sympy(g, F):
    cs = [int(c) % F.p for c in reversed(g.all_coeffs())]
    return Poly(F, cs)


# fields


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 25, 27])
def test_field_axioms(q):
    F = field(q)
    els = list(F.elements())
    assert len(els) == q
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, q - 1) == 1
    # distributivity on a sample
    for a in els[:5]:
        for b in els[:5]:
            for c in els[:5]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)


def test_field_squares():
    F = field(5)
    assert {a for a in F.units() if F.is_square(a)} == {1, 4}
    for a in (1, 4):
        r = F.sqrt(a)
        assert F.mul(r, r) == a


def test_field_is_cached():
    assert field(9) is field(9)
    assert isinstance(field(9), GF)


# polynomials against sympy


@pytest.mark.parametrize(
    "a,b",
    [("T^5+2T^3+T+1", "T^2+1"), ("T^7+T", "T^3+2T+2"), ("(T+1)^4*(T^2+1)", "(T+1)^2*T")],
)
def test_poly_ops_match_sympy(a, b):
    F = field(3)
    fa, fb = P(a), P(b)
    sa, sb = to_sympy(fa), to_sympy(fb)
    assert fa * fb == from_sympy(sa * sb, F)
    q, r = divmod(fa, fb)
    sq, sr = sa.div(sb)
    assert q == from_sympy(sq, F) and r == from_sympy(sr, F)
    assert fa.gcd(fb) == from_sympy(sa.gcd(sb).monic(), F)


def test_gcd_hand_example():
    assert P("T^2+1").gcd(P("T+1")) == Poly.one(field(3))


def test_product_example():
    assert P("T+1") * P("T+2") == P("T^2+2")


def test_inverse_mod():
    p = P("T^2+T+2")
    inv = P("T").invmod(p)
    assert (P("T") * inv) % p == Poly.one(field(3))


def test_xgcd():
    a, b = P("T^4+T+2"), P("T^3+2")
    g, s, t = a.xgcd(b)
    assert s * a + t * b == g


def test_frobenius():
    f = P("T^2+T+1")
    assert f.frobenius(1) == f(P("T^3"))


def test_monic_polys_counts():
    assert len(monic_polys(3, 0)) == 1
    assert len(monic_polys(3, 2)) == 9
    # number of monic irreducibles of degree 2 and 3 over F_3: (9-3)/2, (27-3)/3
    assert len(irreducible_monic(3, 2)) == 3
    assert len(irreducible_monic(3, 3)) == 8
    assert len(irreducible_monic(5, 2)) == 10


@pytest.mark.parametrize("q", [3, 5, 9])
def test_irreducible_via_roots_in_extension(q):
    # a quadratic is irreducible iff it has no root in F_q
    F = field(q)
    for f in monic_polys(q, 2):
        assert f.is_irreducible() == (not f.roots())


# factorization


@pytest.mark.parametrize(
    "text,expected",
    [
        ("T^2+2T", [("T", 1), ("T+2", 1)]),
        ("T^2+1", [("T^2+1", 1)]),
        ("T^2", [("T", 2)]),
    ],
)
def test_factorize_examples(text, expected):
    assert factorize(P(text)) == [(P(p), r) for p, r in expected]


def test_factorize_matches_sympy():
    F = field(5)
    for text in ("T^6+T+1", "(T^2+2)^3*(T+4)^2*T", "T^10+3T^5+2"):
        f = parse_poly(text, 5)
        _, want = to_sympy(f).factor_list()
        got = {(str(p), r) for p, r in factorize(f)}
        ref = {(str(from_sympy(g.monic(), F)), r) for g, r in want}
        assert got == ref


def test_factorize_over_nonprime_field():
    f = parse_poly("T^2+1", 9)
    fs = factorize(f)
    # -1 is a square in F_9
    assert [r for _, r in fs] == [1, 1] and all(p.deg == 1 for p, _ in fs)


def test_is_prime_and_kernel():
    assert is_prime(P("T^2+T+2"))
    assert not is_prime(P("T^2"))
    # primes to an odd power: the square class of n
    assert squarefree_kernel(P("T^3*(T+1)^2")) == P("T")
    assert squarefree_kernel(P("T*(T+1)^3*(T^2+1)^2")) == P("T*(T+1)")


# parsing


def test_parse_forms():
    assert P("2*T^2 + T - 1") == P("2T^2+T+2")
    assert P("(T+1)^3") == P("T^3+1")
    assert P("-(T-1)^3") == P("2T^3+1")
    assert parse_poly("T^2+6", 5) == parse_poly("T^2+1", 5)


@pytest.mark.parametrize("bad", ["T^^2", "T+", "(T+1", "T^-1", "U+1", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_str_round_trip():
    for f in monic_polys(3, 3):
        assert P(str(f)) == f


# residues / CRT


def test_residue_nonunit():
    with pytest.raises(NonUnitError):
        Residue(P("T"), P("T^2")).inverse()


def test_crt_round_trip_example():
    n = P("T^2*(T+1)*(T^2+1)")
    x = Residue(P("T^4+2T+1"), n)
    parts = crt_split(x, factorize(n))
    assert [c.modulus for c in parts] == [P("T^2"), P("T+1"), P("T^2+1")]
    assert crt_join(parts) == x


# rational functions


def test_ratfunc_normalization_and_valuation():
    F = field(3)
    r = RatFunc(P("T^2+T"), P("T^2+2T+1"))
    assert r == RatFunc(P("T"), P("T+1"))
    assert r.valuation(P("T")) == 1 and r.valuation(P("T+1")) == -1
    assert r.valuation_inf() == 0
    assert RatFunc.from_poly(Poly.one(F)).valuation_inf() == 0


# series


def test_series_geometric_inverse():
    # t^3 (1 + T t^2)^(-1) = t^3 - T t^5 + T^2 t^7 - ...
    F = field(3)
    z = Poly.zero(F)
    s = Series([Poly.one(F), z, P("T")], 0, 8, z, "t")
    inv = s.inverse().shift(3)
    assert [inv[k] for k in (3, 5, 7)] == [Poly.one(F), -P("T"), P("T^2")]
    assert inv[4] == z


def test_series_precision_error():
    F = field(3)
    z = Poly.zero(F)
    s = Series([Poly.one(F)], 0, 3, z)
    with pytest.raises(PrecisionError):
        s[3]


def test_series_nth_root():
    F = field(5)
    z = Poly.zero(F)
    s = Series([Poly.one(F), parse_poly("T", 5), parse_poly("T^2+1", 5)], 0, 6, z)
    r = (s**4).nth_root(4, Poly.one(F))
    assert r == s


# polynomials over F_q(T)


def test_squarefree_radical_and_nonsquare():
    F = field(3)
    x = UPoly.x(F)
    f = x**3 * (x + 1) ** 2 * (x + 2)
    assert radical(f) == x * (x + 1) * (x + 2)
    assert squarefree_part(f) == radical(f)
    assert nonsquare_part(f) == x * (x + 2)


def test_nonsquare_part_on_printed_f():
    # -(x^2+(2T+1)p x-p^2)^4 (x^2+(2T+1)x+p) has odd part x^2+(2T+1)x+p
    F = field(3)
    p = UPoly([P("T^2+T+2")], F)
    b = UPoly([P("2T+1")], F)
    x = UPoly.x(F)
    f = -((x * x + b * p * x - p * p) ** 4) * (x * x + b * x + p)
    assert nonsquare_part(f) == x * x + b * x + p


def test_nonsquare_part_char_p_power():
    # x^3 - T is inseparable over F_3(T) but squarefree
    F = field(3)
    f = UPoly([-RatFunc.from_poly(P("T")), 0, 0, 1], F)
    assert nonsquare_part(f) == f


# kernels


def test_backend_is_known():
    assert BACKEND in ("cython", "python")


def test_kernels_agree():
    from drinfeld import _kernels

    a, b = (1, 2, 0, 1, 1, 2), (2, 1, 1)
    for fn in ("mul", "gcd"):
        assert getattr(_kernels, fn)(a, b, 3) == getattr(_pykernels, fn)(a, b, 3)
    assert _kernels.divmod_(a, b, 3) == _pykernels.divmod_(a, b, 3)
    perms = [[1, 0, 2, 3], [0, 1, 3, 2]]
    assert _kernels.orbit_labels(perms, 4) == _pykernels.orbit_labels(perms, 4)
