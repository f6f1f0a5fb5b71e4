"""Acceptance criteria 1-11, one test each.  The terminal summary (see
conftest.py) prints one PASS/FAIL line per criterion."""

import pytest

from drinfeld.algebra import Poly, UPoly, factorize, field, irreducible_monic, monic_polys, parse_poly

crit = pytest.mark.criterion


def P(text, q=3):
    return parse_poly(text, q)


def scan():
    return [n for d in range(1, 5) for n in monic_polys(3, d)] + [n for d in range(1, 4) for n in monic_polys(5, d)]


def test_scan_size():
    # 3 + 9 + 27 + 81 levels at q = 3 and 5 + 25 + 125 at q = 5
    assert len(scan()) == 120 + 155


@crit(1, "genus formula equals orbit brute force")
def test_criterion_1_genus():
    from drinfeld.genus import genus_bruteforce, genus_closed

    bad = [(n.F.q, str(n)) for n in scan() if genus_closed(n) != genus_bruteforce(n)]
    assert bad == []


@crit(2, "cusp count formula and 2^s regular cusps")
def test_criterion_2_cusps():
    from drinfeld.genus import cusp_count
    from drinfeld.orbits import cusp_orbits

    for n in scan():
        cusps = cusp_orbits(n)
        assert cusp_count(n) == len(cusps), n
        assert sum(o.tag == "regular" for o in cusps) == 2 ** len(factorize(n)), n


@crit(3, "genus 0/1 classification")
def test_criterion_3_small_genus():
    from drinfeld.genus import genus_closed

    for q, top in ((3, 4), (5, 3)):
        lin = [n for n in monic_polys(q, 1)]
        quad_primes = [n for n in monic_polys(q, 2) if n.is_irreducible()]
        want0 = set(lin) | {p * p for p in lin}
        want1 = {a * b for i, a in enumerate(lin) for b in lin[i + 1 :]} | set(quad_primes)
        got0 = {n for d in range(1, top + 1) for n in monic_polys(q, d) if genus_closed(n) == 0}
        got1 = {n for d in range(1, top + 1) for n in monic_polys(q, d) if genus_closed(n) == 1}
        assert got0 == want0 and got1 == want1
        assert len(want1) == {3: 6, 5: 20}[q]
    g0_q3 = {n for d in range(1, 5) for n in monic_polys(3, d) if genus_closed(n) == 0}
    assert {str(n) for n in g0_q3} == {"T", "T+1", "T+2", "T^2", "T^2+2T+1", "T^2+T+1"}


@crit(4, "relation between SL and GL genera")
def test_criterion_4_relation():
    from drinfeld.genus import genus_relation_check

    bad = [str(n) for n in scan() if not genus_relation_check(n)[2]]
    assert bad == []
    assert genus_relation_check(P("T^2+1")) == (1, 0, True)
    assert genus_relation_check(P("T^3+2T+1")) == (6, 3, True)


@crit(5, "quotient graph shapes and ramification")
def test_criterion_5_graphs():
    from drinfeld.tree import covering

    # n: (SL vertices per layer, SL edges, Betti, cusps, GL cusps)
    figures = {
        "T*(T+1)": ([2, 4], 6, 1, 4, 4),
        "T^2+1": ([2, 2], 4, 1, 2, 2),
        "T^2": ([3, 4], 6, 0, 4, 3),
        "(T^2+1)^2": ([14, 18, 12, 10], 66, 13, 10, 6),
    }
    tags = {
        "T*(T+1)": ["regular"] * 4,
        "T^2+1": ["regular"] * 2,
        "T^2": ["regular", "irregular", "irregular", "regular"],
        "(T^2+1)^2": ["regular"] + ["irregular"] * 8 + ["regular"],
    }
    for text, (layers, ne, betti, nc, gl_nc) in figures.items():
        cov = covering(P(text))
        g = cov.source
        assert [len(g.layer_vertices(i)) for i in range(g.top + 1)] == layers
        assert (len(g.edges), g.betti, len(g.rays), len(cov.target.rays)) == (ne, betti, nc, gl_nc)
        assert [r.tag for r in g.rays] == tags[text]
        assert all(ram == (tag == "regular") for _, tag, ram in cov.ramification())


@crit(6, "Δ coefficients")
def test_criterion_6_delta():
    from drinfeld.forms import delta_coefficients, delta_p_s

    for q in (3, 5):
        T = P("T", q)
        one = Poly.one(T.F)
        d = delta_coefficients(q, q * q - q + 1)
        assert (d[1], d[q], d[q + 1], d[q * q - q + 1]) == (-one, one, -(T**q - T), -one)
        for p in irreducible_monic(q, 2)[:2]:
            Dp = delta_p_s(p, q * q + 2)
            assert Dp.val == q * q and Dp[q * q] == -one


@crit(7, "printed η and j coefficients")
def test_criterion_7_printed():
    from drinfeld.forms import eta_expansion, j_expansion

    eta3 = {-1: "1", 0: "0", 1: "1", 2: "2T+1", 3: "T*(T+1)", 4: "-(T-1)^3"}
    j3 = {-1: "-1", 0: "T^3-T", 1: "-1", 2: "T^9+T^3+T"}
    eta5a = {-1: "1", 0: "0", 1: "0", 2: "0", 3: "1", 4: "2T+1", 5: "T^2+T+2"}
    eta5b = {-1: "1", 0: "0", 1: "0", 2: "0", 3: "1", 4: "2T+1", 5: "T^2+T+1"}
    j5 = {-1: "-1", 0: "T^5-T", 1: "0", 2: "0", 3: "-1", 4: "T^25+T^5+3T", 5: "4T^30+T^26+T^6+4T^2"}
    for q, ptext, want in ((3, "T^2+T+2", eta3), (5, "T^2+T+2", eta5a), (5, "T^2+T+1", eta5b)):
        eta = eta_expansion(P(ptext, q), 8)
        assert {k: eta[k] for k in want} == {k: P(v, q) for k, v in want.items()}
    for q, want in ((3, j3), (5, j5)):
        j = j_expansion(q, 8)
        assert {k: j[k] for k in want} == {k: P(v, q) for k, v in want.items()}


def _x(F):
    return UPoly([0, 1], F, "x")


def _c(F, text):
    return UPoly([parse_poly(text, F.q)], F, "x")


@crit(8, "f(x) interpolation")
def test_criterion_8_f():
    from drinfeld.forms import solve_f

    F3, F5, F2 = field(3), field(5), field(2)
    x3, x5, x2 = _x(F3), _x(F5), _x(F2)
    cases = []
    for ptext, b in (("T^2+T+2", "2T+1"), ("T^2+2T+2", "2T+2"), ("T^2+1", "2T")):
        p, B = _c(F3, ptext), _c(F3, b)
        cases.append((3, ptext, -((x3 * x3 + B * p * x3 - p * p) ** 4) * (x3 * x3 + B * x3 + p)))
    for ptext, other, mid in (
        ("T^2+T+2", "(T+3)*(T^2+T+1)", "2*(T+2)*(T+4)"),
        ("T^2+T+1", "(T+3)*(T^2+T+2)", "2*T*(T+1)"),
    ):
        p, b = _c(F5, ptext), _c(F5, "2T+1")
        inner = x5**4 - _c(F5, other) * p * x5**3 + _c(F5, mid) * p * p * x5 * x5 + b * p**3 * x5 - p**4
        cases.append((5, ptext, -(inner**6) * (x5 * x5 + b * x5 + p)))
    p2 = _c(F2, "T^2+T+1")
    cases.append((2, "T^2+T+1", (x2 - p2) ** 3 * (x2 * x2 + x2 + p2)))
    for q, ptext, want in cases:
        sol = solve_f(P(ptext, q))
        assert sol.f == want, (q, ptext)
        assert sol.residual_checked == (1, 2, 3, 4)


@crit(9, "Weierstrass models and identities")
def test_criterion_9_models():
    from drinfeld.cli import main
    from drinfeld.ttlevel import ab_product, expected_models, verify_parametrization, weierstrass_models
    import contextlib
    import io
    import json

    for q in (3, 5):
        for p in irreducible_monic(q, 2):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                assert main(["equation", "--q", str(q), "--p", str(p), "--json"]) == 0
            a = p.coeff(1)
            lin = f"(2T+{a})" if a else "2T"
            assert json.loads(buf.getvalue())["weierstrass"] == f"y^2 = x(x^2+{lin}x+{p})"
    for q in (3, 5, 7):
        E1, E2, _ = weierstrass_models(q)
        assert (E1.cubic, E2.cubic) == expected_models(q)
        assert all(verify_parametrization(q).values())
        assert ab_product(q).holds


@crit(10, "Tate's algorithm and conductors")
def test_criterion_10_tate():
    from drinfeld.elliptic import conductor, extremal_type_check, x01_curve
    from drinfeld.ttlevel import weierstrass_models

    for q in (3, 5):
        E1, E2, _ = weierstrass_models(q)
        assert str(conductor(E1.curve())) == "T·(T+1)^2·∞"
        assert str(conductor(E2.curve())) == "T·(T+1)·∞^2"
        for p in irreducible_monic(q, 2):
            E = x01_curve(p)
            c = conductor(E)
            assert c.exponents == {str(p): 1, "∞": 2} and c.degree == 4
            assert [ld.kodaira for ld in c.local] == ["I2", "I2*"]
            assert extremal_type_check(E, p) == (True, ("I2", "I2", "I2*"))


@crit(11, "property suites")
def test_criterion_11_properties():
    from drinfeld.acceptance import check_properties

    ok, detail = check_properties(cases=1000)
    assert ok, detail


def test_verify_aggregates_all_criteria():
    from drinfeld.acceptance import run_checks

    results = run_checks(workers=2)
    assert [r.id for r in results] == list(range(1, 12))
    assert all(r.passed for r in results), [r for r in results if not r.passed]
