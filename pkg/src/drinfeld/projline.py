"""The finite projective line P^1(A/n) with heights and CRT structure.

A point of P^1(A/p^r) has a unique normal form keyed by its height h:

* h = 0:        (u : 1),        payload u mod p^r
* 0 < h < r:    (1 : w p^h),    payload w mod p^(r-h), w prime to p
* h = r:        (1 : 0),        no payload

A point of P^1(A/n) is the tuple of its components over the prime powers
of n, in the order returned by ``factorize``.
"""

from functools import lru_cache
from itertools import product

from .algebra import Poly, factorize
from .algebra.residue import Residue, crt_join


def _polys_below(F, degree):
    """All polynomials of degree < degree, sorted."""
    out = [Poly(F, tail) for tail in product(range(F.q), repeat=degree)]
    out.sort(key=Poly.sort_key)
    return out


class PrimaryLine:
    """P^1(A/p^r) for a monic irreducible p."""

    def __init__(self, p, r):
        self.p, self.r = p, r
        self.F = p.F
        self.mod = p**r
        self.pows = [p**k for k in range(r + 1)]
        pts = [(r, ())]
        dp = p.deg
        for h in range(r - 1, 0, -1):
            for w in _polys_below(self.F, dp * (r - h)):
                if w % p:
                    pts.append((h, w.c))
        for u in _polys_below(self.F, dp * r):
            pts.append((0, u.c))
        self.points = pts
        self.index = {pt: i for i, pt in enumerate(pts)}
        self._perms = {}

    def __len__(self):
        return len(self.points)

    def normalize(self, u, v):
        """Normal form of (u : v); raises ValueError if p divides both."""
        p, r, mod = self.p, self.r, self.mod
        u, v = u % mod, v % mod
        if v % p:
            return (0, (u * v.invmod(mod) % mod).c)
        if not (u % p):
            raise ValueError(f"({u} : {v}) is not a point: both coordinates divisible by {p}")
        w = v * u.invmod(mod) % mod
        if not w:
            return (r, ())
        h = 0
        while not (w % p):
            w = w // p
            h += 1
        return (h, (w % self.pows[r - h]).c)

    def coords(self, pt):
        """A representative pair (u, v) of A-polynomials."""
        h, payload = pt
        F = self.F
        if h == self.r:
            return Poly.one(F), Poly.zero(F)
        if h == 0:
            return Poly(F, payload), Poly.one(F)
        return Poly.one(F), Poly(F, payload) * self.pows[h]

    def act(self, g, pt):
        u, v = self.coords(pt)
        a, b, c, d = g
        return self.normalize(a * u + b * v, c * u + d * v)

    def permutation(self, g):
        """Images of all point indices under g = (a, b, c, d)."""
        key = tuple(x.c for x in g)
        perm = self._perms.get(key)
        if perm is None:
            mod = self.mod
            gm = tuple(x % mod for x in g)
            perm = [self.index[self.act(gm, pt)] for pt in self.points]
            self._perms[key] = perm
        return perm

    def is_constant(self, pt):
        """Whether pt lies in the image of P^1(F_q); returns the F_q point
        (None for infinity) or False."""
        h, payload = pt
        if h == self.r:
            return None
        if h == 0 and len(payload) <= 1:
            return payload[0] if payload else 0
        return False


@lru_cache(maxsize=512)
def primary_line(p, r):
    return PrimaryLine(p, r)


class ProjPoint:
    """A point of P^1(A/n): one normal form per prime power of n."""

    __slots__ = ("line", "components")

    def __init__(self, line, components):
        self.line = line
        self.components = tuple(components)

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.line.n == other.line.n
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.line.n, self.components))

    @property
    def heights(self):
        return tuple(h for h, _ in self.components)

    def label(self):
        return self.line.label(self)

    def __repr__(self):
        return f"ProjPoint({self.label()})"


class ProjectiveLine:
    """P^1(A/n), enumerated in component-lexicographic order."""

    def __init__(self, n):
        if n.deg < 1:
            raise ValueError("n must be non-constant")
        if not n.is_monic():
            raise ValueError("n must be monic")
        self.n = n
        self.F = n.F
        self.q = n.F.q
        self.factors = factorize(n)
        self.parts = [primary_line(p, r) for p, r in self.factors]
        self.sizes = [len(c) for c in self.parts]
        size = 1
        for s in self.sizes:
            size *= s
        self.size = size
        self._perm_cache = {}

    def __len__(self):
        return self.size

    @property
    def s(self):
        return len(self.factors)

    def digits(self, idx):
        out = []
        for s in reversed(self.sizes):
            out.append(idx % s)
            idx //= s
        return out[::-1]

    def index_of(self, z):
        idx = 0
        for part, s, pt in zip(self.parts, self.sizes, z.components):
            idx = idx * s + part.index[pt]
        return idx

    def point(self, idx):
        return ProjPoint(
            self, [part.points[d] for part, d in zip(self.parts, self.digits(idx))]
        )

    def __iter__(self):
        for idx in range(self.size):
            yield self.point(idx)

    def heights_of(self, idx):
        return tuple(part.points[d][0] for part, d in zip(self.parts, self.digits(idx)))

    def from_coords(self, u, v):
        """The point (u : v); u, v may be Residue, Poly or int."""
        u, v = _poly(u, self.F), _poly(v, self.F)
        return ProjPoint(self, [part.normalize(u, v) for part in self.parts])

    def act(self, g, z):
        return ProjPoint(self, [part.act(g, pt) for part, pt in zip(self.parts, z.components)])

    def permutation(self, g):
        """Global permutation of indices induced by g, built from the
        per-component permutations."""
        key = tuple(x.c for x in g)
        perm = self._perm_cache.get(key)
        if perm is None:
            perm = [0]
            for part, s in zip(self.parts, self.sizes):
                cp = part.permutation(g)
                perm = [x * s + y for x in perm for y in cp]
            self._perm_cache[key] = perm
        return perm

    def coords(self, z):
        """A pair (u, v) of residues mod n representing z."""
        us, vs = [], []
        for part, pt in zip(self.parts, z.components):
            u, v = part.coords(pt)
            us.append(Residue(u, part.mod))
            vs.append(Residue(v, part.mod))
        return crt_join(us).value, crt_join(vs).value

    def fraction(self, z):
        """(u, b) with z = (u : b), b = prod p_i^{h_i}; None for [∞]."""
        F = self.F
        heights = z.heights
        if all(h == part.r for h, part in zip(heights, self.parts)):
            return None
        den = Poly.one(F)
        for h, part in zip(heights, self.parts):
            den = den * part.pows[h]
        comps = []
        for (h, payload), part in zip(z.components, self.parts):
            if h == part.r:
                comps.append(Residue(1, part.mod))
            elif h == 0:
                comps.append(Residue(Poly(F, payload) * den, part.mod))
            else:
                m = part.pows[part.r - h]
                unit = (den // part.pows[h]) % m
                comps.append(Residue(unit * Poly(F, payload).invmod(m), m))
        return crt_join(comps).value, den

    def label_key(self, z):
        frac = self.fraction(z)
        if frac is None:
            return ((), ())
        u, den = frac
        return (den.sort_key(), u.sort_key())

    def label(self, z):
        """Display label: [∞], [a] or [a / b] with b = prod p_i^{h_i}."""
        frac = self.fraction(z)
        if frac is None:
            return "[∞]"
        u, den = frac
        if den.is_one():
            return f"[{u}]"
        return f"[{u} / {den}]"


def _poly(x, F):
    if isinstance(x, Residue):
        return x.value
    if isinstance(x, int):
        return Poly.const(F, F(x))
    return x


def enumerate_p1(n):
    return list(ProjectiveLine(n))


def height_profile(z):
    return z.heights


def epsilon(n):
    """#P^1(A/n) = prod |p|^(r-1) (|p| + 1)."""
    out = 1
    for p, r in factorize(n):
        a = p.norm()
        out *= a ** (r - 1) * (a + 1)
    return out
