import random

import pytest

from drinfeld.algebra import Poly, RatFunc, field, irreducible_monic, parse_poly
from drinfeld.elliptic import (
    FinitePlace,
    InfinitePlace,
    SingularCurveError,
    WeierstrassCurve,
    at_infinity_by_substitution,
    base_extend,
    candidate_places,
    conductor,
    curve_invariants,
    extremal_type_check,
    invert_variable,
    kodaira_disc_valuation,
    tate_local,
    x01_curve,
)
from drinfeld.ttlevel import weierstrass_models


def P(text, q=5):
    return parse_poly(text, q)


def R(text, q=5):
    return RatFunc.from_poly(P(text, q))


def curve(q, *a):
    F = field(q)
    return WeierstrassCurve.from_coeffs(*(R(x, q) if isinstance(x, str) else x for x in a), F=F)


def components(kodaira):
    """Number of geometric components of the special fibre."""
    fixed = {"I0": 1, "II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
    if kodaira in fixed:
        return fixed[kodaira]
    if kodaira.endswith("*"):
        return int(kodaira[1:-1]) + 5
    return int(kodaira[1:])


def ogg_holds(ld):
    return ld.disc_valuation == ld.conductor_exponent + components(ld.kodaira) - 1


# invariants


def test_constant_curve_invariants():
    E = curve(5, "0", "0", "0", "1", "0")
    c4, c6, D, j = curve_invariants(E)
    assert D == R("1") and j == R("3")  # Δ = -64, j = 1728
    assert c4 * c4 * c4 - c6 * c6 == D * 1728
    assert E.is_isotrivial()
    with pytest.raises(ValueError):
        conductor(E)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_c4_c6_relation(q):
    rng = random.Random(q)
    F = field(q)
    for _ in range(20):
        a = [Poly(F, [rng.randrange(q) for _ in range(3)]) for _ in range(5)]
        E = WeierstrassCurve(*a, F=F)
        if not E.discriminant:
            continue
        c4, c6 = E.c_invariants
        assert c4 * c4 * c4 - c6 * c6 == E.discriminant * 1728


def test_singular_rejected():
    with pytest.raises(SingularCurveError):
        curve(5, "0", "0", "0", "0", "0")
    with pytest.raises(SingularCurveError):
        curve(5, "0", "1", "0", "0", "0")  # y^2 = x^2 (x + 1)


def test_string_form():
    assert str(x01_curve(P("T^2+T+2"))) == "y^2 = x^3 + (2T+1)x^2 + (T^2+T+2)x"


# Tate's algorithm: classical examples at T, residue characteristic 5


@pytest.mark.parametrize(
    "a,kodaira,f,vd",
    [
        (("0", "0", "0", "0", "T"), "II", 2, 2),
        (("0", "0", "0", "T", "0"), "III", 2, 3),
        (("0", "0", "0", "0", "T^2"), "IV", 2, 4),
        (("0", "0", "0", "0", "T^3"), "I0*", 2, 6),
        (("0", "0", "0", "0", "T^4"), "IV*", 2, 8),
        (("0", "0", "0", "T^3", "0"), "III*", 2, 9),
        (("0", "0", "0", "0", "T^5"), "II*", 2, 10),
        (("0", "1", "0", "0", "T^3"), "I3", 1, 3),
        (("0", "T", "0", "0", "T^4"), "I1*", 2, 7),
        (("0", "T", "0", "0", "T^5"), "I2*", 2, 8),
    ],
)
def test_kodaira_examples(a, kodaira, f, vd):
    ld = tate_local(curve(5, *a), FinitePlace(P("T")))
    assert (ld.kodaira, ld.conductor_exponent, ld.disc_valuation) == (kodaira, f, vd)
    assert kodaira_disc_valuation(kodaira) == vd
    assert ogg_holds(ld)


def test_nonminimal_model_is_reduced():
    ld = tate_local(curve(5, "0", "0", "0", "0", "T^6+T^7"), FinitePlace(P("T")))
    assert ld.kodaira == "I0" and ld.conductor_exponent == 0 and ld.disc_valuation == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_split_and_nonsplit_multiplicative(n):
    # x^2 coefficient 1 (square) splits; 2 is not a square mod 5
    split = tate_local(curve(5, "0", "1", "0", "0", f"T^{n}"), FinitePlace(P("T")))
    assert (split.kodaira, split.tamagawa, split.split) == (f"I{n}", n, True)
    ns = tate_local(curve(5, "0", "2", "0", "0", f"T^{n}"), FinitePlace(P("T")))
    assert (ns.kodaira, ns.tamagawa, ns.split) == (f"I{n}", 2 - n % 2, False)


# randomized: Ogg's formula and invariance under coordinate change


def _random_curve(rng, q, deg=2):
    F = field(q)
    while True:
        a = [Poly(F, [rng.randrange(q) for _ in range(rng.randrange(deg + 1) + 1)]) for _ in range(5)]
        E = WeierstrassCurve(*a, F=F)
        if E.discriminant:
            return E


def _local_table(E, places):
    return {str(pl): (ld.kodaira, ld.conductor_exponent, ld.tamagawa) for pl in places for ld in [tate_local(E, pl)]}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_ogg_formula_random(q):
    rng = random.Random(100 + q)
    for _ in range(25):
        E = _random_curve(rng, q)
        for pl in candidate_places(E):
            assert ogg_holds(tate_local(E, pl)), (E, pl)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_local_data_invariant_under_change(q):
    rng = random.Random(200 + q)
    F = field(q)
    for _ in range(12):
        E = _random_curve(rng, q)
        u = RatFunc(Poly(F, [rng.randrange(1, q)] + [rng.randrange(q) for _ in range(2)]), Poly(F, [1, 1]))
        r, s, t = (Poly(F, [rng.randrange(q) for _ in range(3)]) for _ in range(3))
        E2 = E.change(u, r, s, t)
        places = set(candidate_places(E)) | set(candidate_places(E2))
        assert _local_table(E, places) == _local_table(E2, places)


# ∞


@pytest.mark.parametrize("q", [3, 5])
def test_infinity_native_matches_substitution(q):
    rng = random.Random(300 + q)
    curves = [x01_curve(p) for p in irreducible_monic(q, 2)[:3]]
    curves += [m.curve() for m in weierstrass_models(q)[:2]]
    curves += [_random_curve(rng, q) for _ in range(8)]
    for E in curves:
        a = tate_local(E, InfinitePlace(E.F))
        b = at_infinity_by_substitution(E)
        assert (a.kodaira, a.conductor_exponent, a.tamagawa) == (b.kodaira, b.conductor_exponent, b.tamagawa)


def test_invert_variable():
    F = field(3)
    x = RatFunc(parse_poly("T^2+1", 3), parse_poly("T", 3))
    # (1/U^2 + 1)/(1/U) = (1 + U^2)/U
    assert invert_variable(x) == RatFunc(parse_poly("T^2+1", 3), parse_poly("T", 3))
    assert invert_variable(RatFunc.from_poly(Poly.zero(F))) == RatFunc.from_poly(Poly.zero(F))
    assert invert_variable(RatFunc.from_poly(parse_poly("T", 3))) == RatFunc(Poly.one(F), parse_poly("T", 3))


# the level-p curve


@pytest.mark.parametrize("q", [3, 5])
def test_x01_local_data(q):
    for p in irreducible_monic(q, 2):
        E = x01_curve(p)
        cond = conductor(E)
        assert cond.exponents == {str(p): 1, "∞": 2} and cond.degree == 4
        at_p, at_inf = cond.local
        assert (at_p.kodaira, at_p.tamagawa) == ("I2", 2)
        assert (at_inf.kodaira, at_inf.tamagawa) == ("I2*", 2)
        assert all(ogg_holds(ld) for ld in cond.local)


@pytest.mark.parametrize("q", [3, 5])
def test_extremal_type(q):
    for p in irreducible_monic(q, 2):
        ok, types = extremal_type_check(x01_curve(p), p)
        assert ok and types == ("I2", "I2", "I2*")


def test_component_group_at_infinity_after_extension():
    p = P("T^2+T+2")
    E2 = base_extend(x01_curve(p), field(25))
    assert tate_local(E2, InfinitePlace(field(25))).tamagawa == 4


def test_e2_over_closure():
    _, E2, _ = weierstrass_models(3)
    E = E2.curve()
    types = [tate_local(E, pl).kodaira for pl in candidate_places(E)]
    assert sorted(t for t in types if t != "I0") == ["I2", "I2", "I2*"]


def test_conductor_degree_bound():
    curves = [x01_curve(p) for q in (3, 5) for p in irreducible_monic(q, 2)]
    curves += [m.curve() for q in (3, 5, 7) for m in weierstrass_models(q)[:2]]
    for E in curves:
        assert conductor(E).degree >= 4


def test_base_extend_needs_prime_field():
    E = WeierstrassCurve.from_coeffs(0, 0, 0, 1, parse_poly("T", 9), F=field(9))
    with pytest.raises(ValueError):
        base_extend(E, field(81))


# residue-field root counting against enumeration


@pytest.mark.parametrize("q", [2, 3, 5, 9])
def test_residue_root_counts_match_enumeration(q):
    from drinfeld.elliptic import _ResidueField, _root

    rng = random.Random(400 + q)
    F = field(q)
    places = [FinitePlace(p) for p in irreducible_monic(q, 1)[:1] + irreducible_monic(q, 2)[:2]]
    places.append(InfinitePlace(F))
    for pl in places:
        k = _ResidueField(pl)
        lifts = [pl.lift(r) for r in pl.residues()]
        for _ in range(15):
            cs = [rng.choice(lifts) + rng.choice(lifts) * pl.pi for _ in range(3)]
            cs.append(RatFunc.from_poly(Poly.one(F)))
            brute = sum(pl.val(((x + cs[2]) * x + cs[1]) * x + cs[0]) > 0 for x in lifts)
            assert k.count_roots(cs) == brute
            a = cs[0]
            r = _root(pl, a, F.p)
            assert pl.val(r**F.p - a) > 0
