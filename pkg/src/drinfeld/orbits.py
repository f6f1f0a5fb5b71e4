"""Layer groups G_0 = SL_2(F_q), B, G_i and their GL analogues acting on
P^1(A/n), with orbit decompositions and the G- and B-orbit censuses."""

from dataclasses import dataclass
from itertools import product

from ._kernels import orbit_labels
from .algebra import Poly, field
from .projline import ProjectiveLine

SL, GL = "sl", "gl"


class GroupElement:
    """A 2x2 matrix (a b; c d) over A with cached determinant."""

    __slots__ = ("a", "b", "c", "d", "det")

    def __init__(self, a, b, c, d, F=None):
        if F is None:
            F = next(x.F for x in (a, b, c, d) if isinstance(x, Poly))
        # ints in [0, q) are field-element codes; anything else (e.g. -1) is
        # an integer reduced into the prime field
        a, b, c, d = (
            x if isinstance(x, Poly) else Poly.const(F, x if 0 <= x < F.q else F(x)) for x in (a, b, c, d)
        )
        self.a, self.b, self.c, self.d = a, b, c, d
        self.det = a * d - b * c

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return GroupElement(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "GroupElement(({} {}; {} {}))".format(*self.entries)


def act(g, z):
    """(au+bv : cu+dv)."""
    return z.line.act(g.entries, z)


def _diag(F, x, y):
    return GroupElement(Poly.const(F, x), Poly.zero(F), Poly.zero(F), Poly.const(F, y))


def _unip(F, b):
    return GroupElement(Poly.one(F), b, Poly.zero(F), Poly.one(F))


class LayerGroup:
    """One of the finite groups attached to a vertex or edge of the tree.

    kind "G0" (SL_2(F_q) or GL_2(F_q)), "B" (upper triangular in G0) or
    "G" with index i >= 1 (upper triangular, deg b <= i).
    """

    def __init__(self, q, kind, i=0, flavor=SL):
        if kind not in ("G0", "B", "G"):
            raise ValueError(f"unknown layer group kind {kind!r}")
        if kind == "G" and i < 1:
            raise ValueError("G_i needs i >= 1")
        if flavor not in (SL, GL):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.q, self.kind, self.i, self.flavor = q, kind, i, flavor
        self.F = field(q)

    @property
    def name(self):
        base = {"G0": "G0", "B": "B", "G": f"G{self.i}"}[self.kind]
        return base if self.flavor == SL else f"GL-{base}"

    def __repr__(self):
        return f"LayerGroup({self.name}, q={self.q})"

    @property
    def order(self):
        q = self.q
        if self.flavor == SL:
            if self.kind == "G0":
                return q * (q * q - 1)
            if self.kind == "B":
                return q * (q - 1)
            return (q - 1) * q ** (self.i + 1)
        if self.kind == "G0":
            return (q * q - 1) * (q * q - q)
        if self.kind == "B":
            return (q - 1) ** 2 * q
        return (q - 1) ** 2 * q ** (self.i + 1)

    def generators(self):
        F = self.F
        z = F.gen
        # F_p-basis of F_q is 1, x, x^2, ... encoded as p^k
        basis = [F.p**k for k in range(F.e)]
        T = Poly.gen(F)
        top = self.i if self.kind == "G" else 0
        gens = [_diag(F, z, F.inv(z))]
        for j in range(top + 1):
            Tj = T**j
            gens.extend(_unip(F, Tj.scale(c)) for c in basis)
        if self.kind == "G0":
            gens.append(GroupElement(Poly.zero(F), Poly.one(F), Poly.const(F, F.neg(1)), Poly.zero(F)))
        if self.flavor == GL:
            gens.append(_diag(F, z, 1))
        return gens

    def elements(self):
        """Every element; only for small groups (debug oracle)."""
        F = self.F
        q = self.q
        if self.kind == "G0":
            for a, b, c, d in product(range(q), repeat=4):
                det = F.sub(F.mul(a, d), F.mul(b, c))
                if det and (self.flavor == GL or det == 1):
                    yield GroupElement(a, b, c, d, F)
            return
        deg_b = 0 if self.kind == "B" else self.i
        bs = [Poly(F, cs) for cs in product(range(q), repeat=deg_b + 1)]
        for a in F.units():
            ds = F.units() if self.flavor == GL else [F.inv(a)]
            for d in ds:
                for b in bs:
                    yield GroupElement(Poly.const(F, a), b, Poly.zero(F), Poly.const(F, d))

    def contains(self, g):
        F = self.F
        det = g.det
        if det.deg != 0 or (self.flavor == SL and not det.is_one()):
            return False
        if self.kind == "G0":
            return all(x.deg <= 0 for x in g.entries)
        deg_b = 0 if self.kind == "B" else self.i
        return not g.c and g.a.deg == 0 and g.d.deg == 0 and g.b.deg <= deg_b


def layer_group(q, i, flavor=SL):
    """Vertex group of layer i: G0 for i = 0, else G_i."""
    return LayerGroup(q, "G0", 0, flavor) if i == 0 else LayerGroup(q, "G", i, flavor)


def edge_group(q, i, flavor=SL):
    """Stabilizer of the edge from layer i to i + 1."""
    return LayerGroup(q, "B", 0, flavor) if i == 0 else LayerGroup(q, "G", i, flavor)


@dataclass(frozen=True)
class Orbit:
    representative: object
    index: int
    length: int
    stabilizer: int
    tag: str

    @property
    def heights(self):
        return self.representative.heights

    def as_dict(self):
        return {
            "representative": self.representative.label(),
            "length": self.length,
            "stabilizer": self.stabilizer,
            "type": self.tag,
            "heights": list(self.heights),
        }


class OrbitDecomposition:
    """Partition of P^1(A/n) into orbits; ``labels[idx]`` is the orbit
    number of point idx, orbits numbered by smallest member."""

    def __init__(self, line, group, labels, orbits):
        self.line, self.group = line, group
        self.labels = labels
        self.orbits = orbits

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def orbit_of(self, z):
        return self.orbits[self.labels[self.line.index_of(z)]]

    def as_dict(self):
        return {
            "n": str(self.line.n),
            "q": self.line.q,
            "group": self.group.name,
            "order": self.group.order,
            "orbits": [o.as_dict() for o in self.orbits],
        }


def _line(n):
    return n if isinstance(n, ProjectiveLine) else ProjectiveLine(n)


def orbit_decompose(group, n, tagger=None, key=None):
    """Orbits of ``group`` on P^1(A/n).  The representative is the least
    member by index, or by ``key(line, idx)`` when given."""
    line = _line(n)
    perms = [line.permutation(g.entries) for g in group.generators()]
    labels, count = orbit_labels(perms, line.size)
    lengths = [0] * count
    reps = [-1] * count
    for idx, lab in enumerate(labels):
        if reps[lab] < 0:
            reps[lab] = idx
        lengths[lab] += 1
    if key is not None:
        best = [None] * count
        for idx, lab in enumerate(labels):
            k = key(line, idx)
            if best[lab] is None or k < best[lab]:
                best[lab], reps[lab] = k, idx
    order = group.order
    orbits = []
    for lab in range(count):
        if order % lengths[lab]:
            raise ArithmeticError(
                f"orbit length {lengths[lab]} does not divide |{group.name}| = {order}"
            )
        z = line.point(reps[lab])
        stab = order // lengths[lab]
        tag = tagger(line, z, stab) if tagger else ""
        orbits.append(Orbit(z, reps[lab], lengths[lab], stab, tag))
    return OrbitDecomposition(line, group, labels, orbits)


def stabilizer_order_bruteforce(group, z):
    return sum(1 for g in group.elements() if act(g, z) == z)


def _require_odd(q):
    if q % 2 == 0:
        raise ValueError(f"q = {q} is even; the orbit census assumes q odd")


def g_orbit_type(line, z, stab):
    """Type tag a, a*, b, c or d of a G0-orbit (SL flavor, q odd)."""
    q = line.q
    consts = [part.is_constant(pt) for part, pt in zip(line.parts, z.components)]
    if all(c is not False for c in consts):
        k = len(set(consts))
        if k == 1:
            return "a"
        if k == 2:
            return "a*"
    if stab == q + 1:
        return "b"
    if stab == 2 * q:
        return "c"
    if stab == 2:
        return "d"
    raise ArithmeticError(f"unclassified G-orbit of {z} with stabilizer {stab}")


def cusp_tag(line, z, stab):
    regular = all(h in (0, part.r) for h, part in zip(z.heights, line.parts))
    return "regular" if regular else "irregular"


def cusp_layer(n):
    """Index of the layer carrying the cusp rays: max(1, deg n - 1)."""
    return max(1, n.deg - 1)


def g_orbits(n):
    line = _line(n)
    _require_odd(line.q)
    return orbit_decompose(LayerGroup(line.q, "G0"), line, g_orbit_type)


def b_orbits(n, flavor=SL):
    line = _line(n)
    return orbit_decompose(LayerGroup(line.q, "B", flavor=flavor), line)


def classify_g_orbits(n):
    counts = dict.fromkeys(("a", "a*", "b", "c", "d"), 0)
    for o in g_orbits(n):
        counts[o.tag] += 1
    return counts


def classify_b_orbits(n):
    """Number of B-orbits inside the G-orbits of each type, plus the total."""
    line = _line(n)
    gd = g_orbits(line)
    bd = b_orbits(line)
    counts = dict.fromkeys(("a", "a*", "b", "c", "d"), 0)
    for o in bd:
        counts[gd.orbits[gd.labels[o.index]].tag] += 1
    counts["total"] = len(bd)
    return counts


def cusp_orbits(n, flavor=SL):
    line = _line(n)
    if flavor == SL:
        _require_odd(line.q)
    group = LayerGroup(line.q, "G", cusp_layer(line.n), flavor)
    return orbit_decompose(group, line, cusp_tag, _label_key)


def _label_key(line, idx):
    return line.label_key(line.point(idx))
