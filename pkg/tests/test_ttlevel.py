import pytest

from drinfeld.algebra import Poly, RatFunc, UPoly, factorize, field, parse_poly
from drinfeld.elliptic import conductor
from drinfeld.ttlevel import (
    ab_product,
    cyclic_t_relation,
    expected_models,
    models_for_level,
    parametrization,
    split_roots,
    verify_parametrization,
    weierstrass_models,
)

QS = [3, 5, 7]


@pytest.mark.parametrize("q", QS)
def test_cyclic_relation(q):
    rel = cyclic_t_relation(q)
    assert all(rel.checks.values()), rel.checks


@pytest.mark.parametrize("q", QS)
def test_parametrization(q):
    assert verify_parametrization(q) == {
        "plane equation": True,
        "deg x_num = deg x_den = q+1": True,
        "x_num, x_den coprime": True,
    }


@pytest.mark.parametrize("q", QS)
def test_ab_product(q):
    ab = ab_product(q)
    assert ab.holds and ab.first_difference() is None


@pytest.mark.parametrize("q", [3, 5])
def test_ab_product_pointwise(q):
    # evaluate the parametrized j at a few z in F_q(T), independently of the
    # polynomial bookkeeping
    F = field(q)
    T = RatFunc.from_poly(Poly.gen(F))
    P = parametrization(q)
    ab = ab_product(q)
    for z in (T, T * T + 1, (T + 2).inverse()):
        x = P.x_num(z) / P.Dx(z)
        j = -(x ** (q + 1)) / (T + x)
        assert j == ab.a(z) / ab.b(z)


@pytest.mark.parametrize("q", QS)
def test_models_match_closed_forms(q):
    E1, E2, info = weierstrass_models(q)
    e1, e2 = expected_models(q)
    assert E1.cubic == e1 and E2.cubic == e2
    assert info["kernel"] == Poly.gen(field(q)) + Poly.one(field(q))


def test_q3_e2_equation():
    F = field(3)
    T = RatFunc.from_poly(Poly.gen(F))
    x = UPoly([0, 1], F, "z")
    c = lambda a: UPoly([a], F, "z")  # noqa: E731
    _, E2, _ = weierstrass_models(3)
    assert E2.cubic == x * (x + c(((T + 1) ** 2).inverse())) * (x + c((T + 1).inverse()))


@pytest.mark.parametrize("q", QS)
def test_models_geometrically_isomorphic(q):
    E1, E2, _ = weierstrass_models(q)
    assert E1.curve().j_invariant == E2.curve().j_invariant


@pytest.mark.parametrize("q", QS)
def test_conductors(q):
    E1, E2, _ = weierstrass_models(q)
    assert conductor(E1.curve()).exponents == {"T": 1, "T+1": 2, "∞": 1}
    assert conductor(E2.curve()).exponents == {"T": 1, "T+1": 1, "∞": 2}
    assert str(conductor(E1.curve())) == "T·(T+1)^2·∞"
    assert str(conductor(E2.curve())) == "T·(T+1)·∞^2"


def test_even_q_rejected():
    with pytest.raises(ValueError):
        weierstrass_models(4)


def test_split_roots():
    assert split_roots(parse_poly("T^2+T", 3)) == (0, 2)
    with pytest.raises(ValueError):
        split_roots(parse_poly("T^2+1", 3))


def test_level_t_t1_is_identity():
    E1, E2, _ = weierstrass_models(3)
    m1, m2 = models_for_level(parse_poly("T^2+T", 3))
    assert (m1.cubic, m2.cubic) == (E1.cubic, E2.cubic)


@pytest.mark.parametrize("q,text", [(3, "T^2+2T"), (5, "T^2+3T+2"), (5, "(T+1)*(T+4)")])
def test_other_levels_have_bad_reduction_at_n(q, text):
    n = parse_poly(text, q)
    primes = {str(p) for p, _ in factorize(n)}
    for m in models_for_level(n):
        cond = conductor(m.curve())
        assert set(cond.exponents) == primes | {"∞"}
        assert cond.degree == 4
