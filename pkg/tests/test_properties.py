"""Randomized property suites, 1000 cases each."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from drinfeld.algebra import (
    Poly,
    Residue,
    Series,
    UPoly,
    crt_join,
    crt_split,
    factorize,
    field,
    nonsquare_part,
    parse_poly,
    squarefree_part,
)
from drinfeld.orbits import LayerGroup, orbit_decompose
from drinfeld.projline import ProjectiveLine

N = 1000
cfg = settings(max_examples=N, deadline=None, suppress_health_check=[HealthCheck.too_slow])

Q = st.sampled_from([3, 5])


@st.composite
def polys(draw, q=None, max_deg=6, monic=False, nonconstant=False):
    q = q or draw(Q)
    F = field(q)
    d = draw(st.integers(1 if nonconstant else 0, max_deg))
    cs = draw(st.lists(st.integers(0, q - 1), min_size=d + 1, max_size=d + 1))
    if monic:
        cs[-1] = 1
    return Poly(F, cs)


@cfg
@given(st.data())
def test_crt_round_trip(data):
    n = data.draw(polys(max_deg=6, monic=True, nonconstant=True))
    x = Residue(data.draw(polys(q=n.F.q, max_deg=9)), n)
    parts = crt_split(x, factorize(n))
    assert crt_join(parts) == x
    # each component is the reduction of x
    for c in parts:
        assert c.value == x.value % c.modulus


@cfg
@given(st.data())
def test_factorize_refines(data):
    n = data.draw(polys(max_deg=8, monic=True, nonconstant=True))
    fs = factorize(n)
    prod = Poly.one(n.F)
    for p, r in fs:
        assert p.is_monic() and p.is_irreducible()
        prod = prod * p**r
    assert prod == n
    assert len({p for p, _ in fs}) == len(fs)


@cfg
@given(st.data())
def test_series_root_inverts_power(data):
    q = data.draw(Q)
    F = field(q)
    zero = Poly.zero(F)
    prec = data.draw(st.integers(1, 6))
    rest = [data.draw(polys(q=q, max_deg=2)) for _ in range(prec - 1)]
    s = Series([Poly.one(F)] + rest, 0, prec, zero, "s")
    k = data.draw(st.sampled_from([k for k in range(2, 9) if k % q]))
    assert (s**k).nth_root(k, Poly.one(F)) == s
    assert s * s.inverse() == Series.one(prec, zero, "s")


@cfg
@given(st.data())
def test_squarefree_idempotent(data):
    q = data.draw(Q)
    F = field(q)
    factors = [UPoly([data.draw(polys(q=q, max_deg=1)), 1], F) for _ in range(data.draw(st.integers(1, 3)))]
    f = UPoly([1], F)
    for g in factors:
        f = f * g ** data.draw(st.integers(1, 3))
    a, b = squarefree_part(f), nonsquare_part(f)
    assert squarefree_part(a) == a
    assert nonsquare_part(b) == b
    # every root of f / b has even multiplicity
    assert nonsquare_part(f.exact_div(b)).deg == 0
    assert a.exact_div(b) * b == a


@cfg
@given(st.data())
def test_precision_monotone(data):
    q = data.draw(Q)
    F = field(q)
    zero = Poly.zero(F)
    cs = [Poly.one(F)] + [data.draw(polys(q=q, max_deg=2)) for _ in range(6)]
    lo = data.draw(st.integers(1, 6))
    a_lo, a_hi = Series(cs[:lo], 0, lo, zero, "s"), Series(cs, 0, 7, zero, "s")
    b = Series(list(reversed(cs)), 0, 7, zero, "s")
    # more input precision never changes the coefficients already known
    assert a_hi.inverse().truncate(lo) == a_lo.inverse()
    assert (a_hi * b).truncate(lo) == a_lo * b.truncate(lo)
    assert (a_hi**3).truncate(lo) == a_lo**3


_LINES = [ProjectiveLine(parse_poly(t, 3)) for t in ("T^2", "T^2+1", "T*(T+1)", "T^3", "T^2*(T+1)")]
_GROUPS = [
    LayerGroup(3, "G0"),
    LayerGroup(3, "B"),
    LayerGroup(3, "G", 1),
    LayerGroup(3, "G", 2),
    LayerGroup(3, "G0", flavor="gl"),
    LayerGroup(3, "G", 1, flavor="gl"),
]
_DECS = {}


def _dec(i, j):
    if (i, j) not in _DECS:
        _DECS[i, j] = orbit_decompose(_GROUPS[j], _LINES[i])
    return _DECS[i, j]


@cfg
@given(st.integers(0, len(_LINES) - 1), st.integers(0, len(_GROUPS) - 1), st.integers(0, 10**6))
def test_orbit_stabilizer(i, j, k):
    line, group = _LINES[i], _GROUPS[j]
    dec = _dec(i, j)
    z = line.point(k % len(line))
    o = dec.orbit_of(z)
    assert o.length * o.stabilizer == group.order
    # the orbit is closed under the generators
    for g in group.generators():
        assert dec.orbit_of(line.act(g.entries, z)) is o
