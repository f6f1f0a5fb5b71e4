import pytest

from drinfeld.algebra import factorize, irreducible_monic, monic_polys, parse_poly
from drinfeld.genus import (
    classify_small_genus,
    cusp_count,
    cuspidal_group_order,
    gamma0_genus,
    genus_bruteforce,
    genus_closed,
    genus_relation_check,
    genus_report,
    kappa,
    me,
    orbit_counts,
)
from drinfeld.orbits import cusp_orbits


def P(text, q=3):
    return parse_poly(text, q)


@pytest.mark.parametrize("text,g", [("T", 0), ("T*(T+1)", 1), ("T^2+1", 1), ("(T^2+1)^2", 13)])
def test_genus_examples(text, g):
    assert genus_closed(P(text)) == g
    assert genus_bruteforce(P(text)) == g


@pytest.mark.parametrize(
    "text,counts", [("T^2+1", (2, 4, 2)), ("T^2", (3, 6, 4)), ("T*(T+1)", (2, 6, 4))]
)
def test_orbit_counts(text, counts):
    assert orbit_counts(P(text)) == counts


def test_kappa_and_me():
    assert kappa(P("T^2")) == 1 + 3
    assert kappa(P("(T^2+1)^2")) == 1 + 9
    assert kappa(P("T^3")) == 3 + 3
    assert me(P("T^2+1")) == 1 and me(P("T*(T^2+1)")) == 0


@pytest.mark.parametrize("text,c", [("T", 2), ("T^2+1", 2), ("T^2", 4), ("(T^2+1)^2", 10)])
def test_cusp_count(text, c):
    assert cusp_count(P(text)) == c
    assert len(cusp_orbits(P(text))) == c


@pytest.mark.parametrize("q,maxdeg", [(3, 3), (5, 2)])
def test_closed_equals_bruteforce(q, maxdeg):
    for d in range(1, maxdeg + 1):
        for n in monic_polys(q, d):
            assert genus_closed(n) == genus_bruteforce(n), n
            assert cusp_count(n) == len(cusp_orbits(n)), n
            regular = sum(o.tag == "regular" for o in cusp_orbits(n))
            assert regular == 2 ** len(factorize(n)), n


@pytest.mark.parametrize("text,g1,g0", [("T^2+1", 1, 0), ("T*(T+1)", 1, 0)])
def test_relation_examples(text, g1, g0):
    assert genus_relation_check(P(text)) == (g1, g0, True)


def test_relation_irreducible_cubics():
    for p in irreducible_monic(3, 3)[:3]:
        assert genus_relation_check(p) == (6, 3, True)


def test_gamma0_genus_small():
    # X_0(n) of degree <= 2 has genus 0
    for n in monic_polys(3, 2):
        assert gamma0_genus(n) == 0


def test_small_genus_q3():
    g0, g1, ok = classify_small_genus(3)
    assert ok
    assert {str(n) for n in g0} == {"T", "T+1", "T+2", "T^2", "T^2+2T+1", "T^2+T+1"}
    assert {str(n) for n in g1} == {"T^2+T", "T^2+2T", "T^2+2", "T^2+1", "T^2+T+2", "T^2+2T+2"}


def test_small_genus_q5_count():
    g0, g1, ok = classify_small_genus(5, max_deg=3)
    assert ok and len(g1) == 20 and len(g0) == 10


@pytest.mark.parametrize("q,text,order", [(3, "T^2+1", 2), (3, "T", 1), (5, "T^2+2", 2), (3, "T^3+2T+1", 13)])
def test_cuspidal_group_order(q, text, order):
    assert cuspidal_group_order(parse_poly(text, q)) == order


def test_cuspidal_group_order_rejects_composite():
    with pytest.raises(ValueError):
        cuspidal_group_order(P("T^2"))


def test_translation_invariance():
    for n in monic_polys(3, 3)[:20]:
        g = genus_closed(n)
        for c in (1, 2):
            assert genus_closed(n(P("T") + P(str(c)))) == g


def test_even_q_rejected():
    with pytest.raises(ValueError):
        genus_closed(parse_poly("T^2+T+1", 2))


def test_report():
    r = genus_report(P("T^2+1"))
    d = r.as_dict()
    assert d["genus"] == d["genus_bruteforce"] == 1
    assert d["cusps"] == 2 and d["regular_cusps"] == 2 and d["relation_holds"]
    assert d["epsilon"] == 10 and d["cusp_layer"] == 1
