"""Quotient graphs of the Bruhat-Tits tree by level-n congruence groups.

Layer i vertices are orbits of the vertex group G_i on P^1(A/n) and the
edges from layer i to i + 1 are orbits of G_i ∩ G_{i+1} (B for i = 0,
G_i itself for i >= 1).  From layer L = max(1, deg n - 1) on the graph is
a disjoint union of half-lines, so it is stored up to layer L with one
ray per layer-L vertex.
"""

from dataclasses import dataclass, field as dc_field

from .orbits import GL, SL, cusp_tag, edge_group, layer_group, orbit_decompose, cusp_layer
from .projline import ProjectiveLine


@dataclass(frozen=True)
class Vertex:
    id: int
    layer: int
    label: str
    stabilizer: int
    size: int


@dataclass(frozen=True)
class Edge:
    id: int
    layer: int
    label: str
    src: int
    dst: int
    stabilizer: int


@dataclass(frozen=True)
class Ray:
    vertex: int
    tag: str
    label: str


@dataclass
class QuotientGraph:
    n: object
    q: int
    flavor: str
    top: int
    vertices: list = dc_field(default_factory=list)
    edges: list = dc_field(default_factory=list)
    rays: list = dc_field(default_factory=list)
    # orbit decompositions per layer, kept for the covering map
    vertex_orbits: list = dc_field(default_factory=list, repr=False)
    edge_orbits: list = dc_field(default_factory=list, repr=False)
    vertex_ids: list = dc_field(default_factory=list, repr=False)

    def layer_vertices(self, i):
        return [v for v in self.vertices if v.layer == i]

    def layer_edges(self, i):
        return [e for e in self.edges if e.layer == i]

    @property
    def betti(self):
        return len(self.edges) - len(self.vertices) + self.components()

    def components(self):
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = find(e.src), find(e.dst)
            if a != b:
                parent[a] = b
        return len({find(v.id) for v in self.vertices})

    def is_connected(self):
        return self.components() == 1

    def degree(self, vid):
        d = sum((e.src == vid) + (e.dst == vid) for e in self.edges)
        return d + sum(r.vertex == vid for r in self.rays)

    def cusp_labels(self):
        return [r.label for r in self.rays]

    def as_dict(self):
        return {
            "n": str(self.n),
            "q": self.q,
            "flavor": self.flavor,
            "cusp_layer": self.top,
            "betti": self.betti,
            "vertices": [vars(v) for v in self.vertices],
            "edges": [vars(e) for e in self.edges],
            "rays": [vars(r) for r in self.rays],
        }


def _keys(line):
    keys = getattr(line, "_label_keys", None)
    if keys is None:
        keys = [line.label_key(z) for z in line]
        line._label_keys = keys
    return keys


def _key(line, idx):
    return _keys(line)[idx]


def build_graph(n, flavor=SL):
    line = n if isinstance(n, ProjectiveLine) else ProjectiveLine(n)
    n, q = line.n, line.q
    if flavor == SL and q % 2 == 0:
        raise ValueError(f"q = {q} is even; the SL quotient graph assumes q odd")
    top = cusp_layer(n)
    g = QuotientGraph(n, q, flavor, top)
    for i in range(top + 1):
        tagger = cusp_tag if i == top else None
        dec = orbit_decompose(layer_group(q, i, flavor), line, tagger, _key)
        ids = []
        for o in dec:
            vid = len(g.vertices)
            ids.append(vid)
            g.vertices.append(Vertex(vid, i, o.representative.label(), o.stabilizer, o.length))
        g.vertex_orbits.append(dec)
        g.vertex_ids.append(ids)
    for i in range(top):
        # G_i ∩ G_{i+1} = G_i for i >= 1: reuse the vertex decomposition
        dec = g.vertex_orbits[i] if i >= 1 else orbit_decompose(edge_group(q, 0, flavor), line, None, _key)
        lo, hi = g.vertex_orbits[i], g.vertex_orbits[i + 1]
        for o in dec:
            src = g.vertex_ids[i][lo.labels[o.index]]
            dst = g.vertex_ids[i + 1][hi.labels[o.index]]
            g.edges.append(Edge(len(g.edges), i, o.representative.label(), src, dst, o.stabilizer))
        g.edge_orbits.append(dec)
    for vid, o in zip(g.vertex_ids[top], g.vertex_orbits[top]):
        g.rays.append(Ray(vid, o.tag, o.representative.label()))
    return g


@dataclass
class CoveringMap:
    source: QuotientGraph
    target: QuotientGraph
    vertex_map: dict
    edge_map: dict
    ray_map: dict

    def fiber_sizes(self, kind="vertex"):
        m = {"vertex": self.vertex_map, "edge": self.edge_map, "ray": self.ray_map}[kind]
        sizes = {}
        for t in m.values():
            sizes[t] = sizes.get(t, 0) + 1
        return sizes

    def ramification(self):
        """Per SL cusp: (label, tag, ramifies).  A cusp ramifies when it is
        alone in its fiber."""
        sizes = self.fiber_sizes("ray")
        out = []
        for k, r in enumerate(self.source.rays):
            out.append((r.label, r.tag, sizes[self.ray_map[k]] == 1))
        return out


def covering(n):
    """The map from the SL quotient graph onto the GL quotient graph."""
    line = n if isinstance(n, ProjectiveLine) else ProjectiveLine(n)
    src, tgt = build_graph(line, SL), build_graph(line, GL)
    vmap, emap = {}, {}
    for i in range(src.top + 1):
        sdec, tdec = src.vertex_orbits[i], tgt.vertex_orbits[i]
        for vid, o in zip(src.vertex_ids[i], sdec):
            vmap[vid] = tgt.vertex_ids[i][tdec.labels[o.index]]
    # edge ids are assigned layer by layer in orbit order
    soff = toff = 0
    for i in range(src.top):
        sdec, tdec = src.edge_orbits[i], tgt.edge_orbits[i]
        for k, o in enumerate(sdec):
            emap[soff + k] = toff + tdec.labels[o.index]
        soff += len(sdec)
        toff += len(tdec)
    tray = {r.vertex: k for k, r in enumerate(tgt.rays)}
    rmap = {k: tray[vmap[r.vertex]] for k, r in enumerate(src.rays)}
    return CoveringMap(src, tgt, vmap, emap, rmap)


def _dot_id(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g, name=None):
    """Graphviz text: solid edges for the finite part, dashed arrows for
    the cusp rays."""
    name = name or f"X_{g.flavor}_{g.n}"
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(
            f"  v{v.id} [label={_dot_id(v.label)}, layer={v.layer}, stab={v.stabilizer}];"
        )
    for e in g.edges:
        lines.append(f"  v{e.src} -> v{e.dst} [dir=none, label={_dot_id(e.label)}];")
    for k, r in enumerate(g.rays):
        lines.append(f"  c{k} [shape=point, style=invis];")
        lines.append(
            f"  v{r.vertex} -> c{k} [style=dashed, label={_dot_id(r.label)}, tag={r.tag}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
