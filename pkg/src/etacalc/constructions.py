"""Graph and complex constructions: refinements, connection graphs,
joins, named generators, prime graphs, random graphs and the recursive
sphere/collapsibility predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable

from .complexes import Face, InputError, SimplicialComplex
from .graphs import Graph


@dataclass(frozen=True)
class LabeledGraph:
    """A graph whose vertices 0..n-1 index the faces of a source complex."""

    graph: Graph
    faces: tuple[Face, ...]

    def face_of(self, vertex: int) -> Face:
        return self.faces[vertex]


def barycentric_refinement(complex_: SimplicialComplex) -> LabeledGraph:
    """Graph on the faces; edges between faces in strict containment."""
    faces = complex_.faces
    sets = [frozenset(f) for f in faces]
    n = len(faces)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if sets[i] < sets[j] or sets[j] < sets[i]
    ]
    return LabeledGraph(Graph(range(n), edges), faces)


def connection_graph(complex_: SimplicialComplex) -> LabeledGraph:
    """Graph on the faces; edges between distinct intersecting faces."""
    faces = complex_.faces
    sets = [frozenset(f) for f in faces]
    n = len(faces)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if sets[i] & sets[j]
    ]
    return LabeledGraph(Graph(range(n), edges), faces)


# -- Barycentric f-vector operator ---------------------------------------

def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    row = [1] + [0] * k  # row for n = 0
    for _ in range(n):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, k + 1)]
    return row[k]


def barycentric_operator(d: int) -> list[list[int]]:
    """(d+1)x(d+1) matrix S with S[i][j] = i! * Stirling2(j, i), 1-based.

    Maps the f-vector of a complex to the f-vector of its refinement.
    """
    if d < 0:
        raise InputError("dimension must be >= 0")
    return [
        [math.factorial(i) * stirling2(j, i) for j in range(1, d + 2)]
        for i in range(1, d + 2)
    ]


def apply_operator(matrix: list[list[int]], vec: Iterable[int]) -> tuple[int, ...]:
    v = list(vec)
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in matrix)


# -- joins and sums -------------------------------------------------------

def _relabel_disjoint(g: Graph, h: Graph) -> tuple[Graph, Graph]:
    gm = {v: i for i, v in enumerate(g.vertices)}
    hm = {v: i + g.n for i, v in enumerate(h.vertices)}
    return g.relabel(gm), h.relabel(hm)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    g2, h2 = _relabel_disjoint(g, h)
    return Graph(g2.vertices + h2.vertices, g2.edges() + h2.edges())


def zykov_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    g2, h2 = _relabel_disjoint(g, h)
    cross = [(u, v) for u in g2.vertices for v in h2.vertices]
    return Graph(g2.vertices + h2.vertices, g2.edges() + h2.edges() + cross)


def wedge_sum(g: Graph, h: Graph, x: int, y: int) -> Graph:
    """Glue h to g by identifying vertex y of h with vertex x of g."""
    if x not in g.adj:
        raise InputError(f"unknown vertex {x} in first graph")
    if y not in h.adj:
        raise InputError(f"unknown vertex {y} in second graph")
    g2, h2 = _relabel_disjoint(g, h)
    x2 = g.vertices.index(x)
    y2 = h.vertices.index(y) + g.n
    edges = g2.edges() + [
        (min(a, b), max(a, b))
        for a, b in ((x2 if u == y2 else u, x2 if v == y2 else v) for u, v in h2.edges())
    ]
    verts = [v for v in g2.vertices + h2.vertices if v != y2]
    return Graph(verts, edges)


# -- named generators -----------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("kn needs n >= 1")
    return Graph(range(n), combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cn needs n >= 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(m: int) -> Graph:
    """Path on m vertices (m-1 edges)."""
    if m < 1:
        raise InputError("path needs m >= 1")
    return Graph(range(m), [(i, i + 1) for i in range(m - 1)])


def edgeless_graph(k: int) -> Graph:
    if k < 0:
        raise InputError("edgeless needs k >= 0")
    return Graph(range(k))


def star_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("star needs n >= 1 leaves")
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)])


def wheel_graph(n: int) -> Graph:
    """Hub vertex 0 joined to a rim cycle on n vertices."""
    if n < 3:
        raise InputError("wheel needs rim length >= 3")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), rim + [(0, i) for i in range(1, n + 1)])


def complete_bipartite_graph(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise InputError("knm needs n, m >= 1")
    return Graph(range(n + m), [(i, n + j) for i in range(n) for j in range(m)])


def house_graph() -> Graph:
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (3, 5)])


def octahedron_graph() -> Graph:
    g = zykov_join(edgeless_graph(2), edgeless_graph(2))
    return zykov_join(g, edgeless_graph(2))


def cross16_graph() -> Graph:
    """The 16-cell, the join of four edgeless pairs; a 3-sphere."""
    return zykov_join(octahedron_graph(), edgeless_graph(2))


def double_pyramid_graph() -> Graph:
    """Triple suspension of a 4-cycle, P3 + C4."""
    return zykov_join(edgeless_graph(3), cycle_graph(4))


def figure8_graph(k: int) -> Graph:
    if k < 3:
        raise InputError("fig8 needs cycle length >= 3")
    return wedge_sum(cycle_graph(k), cycle_graph(k), 0, 0)


def moebius_graph(n: int) -> Graph:
    """Triangulated Moebius strip: the circulant C_n(1,2) for odd n >= 7."""
    if n < 7 or n % 2 == 0:
        raise InputError("moebius needs odd n >= 7")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, (i + 2) % n) for i in range(n)]
    return Graph(range(n), [(min(u, v), max(u, v)) for u, v in edges])


def _squarefree(k: int) -> bool:
    d = 2
    while d * d <= k:
        if k % (d * d) == 0:
            return False
        d += 1
    return True


def prime_graph(n: int) -> Graph:
    """Divisibility graph on the squarefree integers in [2, n]."""
    if n < 2:
        raise InputError("prime graph needs n >= 2")
    vs = [k for k in range(2, n + 1) if _squarefree(k)]
    edges = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if v % u == 0]
    return Graph(vs, edges)


def prime_connection_graph(n: int) -> Graph:
    """Common-factor graph on the squarefree integers in [2, n]."""
    if n < 2:
        raise InputError("prime graph needs n >= 2")
    vs = [k for k in range(2, n + 1) if _squarefree(k)]
    edges = [
        (u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if math.gcd(u, v) > 1
    ]
    return Graph(vs, edges)


# -- seeded random graphs --------------------------------------------------

class SplitMix64:
    """Deterministic 64-bit PRNG (splitmix64), identical on all platforms.

    state advances by the golden-ratio increment; uniform doubles take
    the top 53 bits of the output word.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        return self.next_u64() % n


def erdos_renyi(n: int, p, seed: int = 0) -> Graph:
    """G(n, p) with edges drawn in lexicographic order from SplitMix64."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if Fraction(rng.uniform()) < p:
                edges.append((i, j))
    return Graph(range(n), edges)


GENERATORS = {
    "kn": (complete_graph, 1),
    "cn": (cycle_graph, 1),
    "path": (path_graph, 1),
    "edgeless": (edgeless_graph, 1),
    "star": (star_graph, 1),
    "wheel": (wheel_graph, 1),
    "knm": (complete_bipartite_graph, 2),
    "house": (house_graph, 0),
    "octahedron": (octahedron_graph, 0),
    "cross16": (cross16_graph, 0),
    "doublepyramid": (double_pyramid_graph, 0),
    "fig8": (figure8_graph, 1),
    "moebius": (moebius_graph, 1),
    "prime": (prime_graph, 1),
    "er": (erdos_renyi, 3),
}


def named_generator(name: str, params: Iterable = ()) -> Graph:
    if name not in GENERATORS:
        raise InputError(f"unknown generator {name!r} (have {sorted(GENERATORS)})")
    fn, arity = GENERATORS[name]
    args = list(params)
    if len(args) != arity:
        raise InputError(f"generator {name!r} takes {arity} parameter(s)")
    return fn(*args)


# -- canonical forms --------------------------------------------------------

def _color_refine(graph: Graph) -> dict[int, int]:
    """Iterative color refinement; returns a stable vertex coloring."""
    colors = {v: graph.degree(v) for v in graph.vertices}
    while True:
        sig = {
            v: (colors[v], tuple(sorted(colors[w] for w in graph.adj[v])))
            for v in graph.vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in graph.vertices}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def canonical_key(graph: Graph) -> tuple[int, int]:
    """(n, bits) canonical form: minimal adjacency bit-string over all
    vertex orders compatible with the color-refinement partition."""
    n = graph.n
    if n == 0:
        return (0, 0)
    colors = _color_refine(graph)
    cells: dict[int, list[int]] = {}
    for v in graph.vertices:
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    best = None
    for perm_parts in product(*(permutations(cell) for cell in ordered_cells)):
        order = [v for part in perm_parts for v in part]
        bits = 0
        for i in range(n):
            oi = order[i]
            for j in range(i + 1, n):
                bits <<= 1
                if graph.has_edge(oi, order[j]):
                    bits |= 1
        if best is None or bits < best:
            best = bits
    return (n, best)


def graph_from_key(key: tuple[int, int]) -> Graph:
    n, bits = key
    edges = []
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((i, j))
    return Graph(range(n), edges)


# -- recursive sphere / collapsibility predicates ---------------------------

_CANON_LIMIT = 12  # full canonicalization cost grows fast beyond this

_collapsible_cache: dict = {}
_sphere_cache: dict = {}
_dgraph_cache: dict = {}


def _memo_key(graph: Graph):
    if graph.n <= _CANON_LIMIT:
        return canonical_key(graph)
    # exact structural key; misses isomorphic repeats but is always sound
    norm = {v: i for i, v in enumerate(graph.vertices)}
    return (graph.n, tuple((norm[u], norm[v]) for u, v in graph.edges()))


def is_collapsible(graph: Graph) -> bool:
    """True iff some vertex x has both S(x) and G minus x collapsible.

    The one-point graph is collapsible; the empty graph is not.
    """
    if graph.n == 0:
        return False
    if graph.n == 1:
        return True
    key = _memo_key(graph)
    got = _collapsible_cache.get(key)
    if got is not None:
        return got
    result = any(
        is_collapsible(graph.unit_sphere(x)) and is_collapsible(graph.delete_vertex(x))
        for x in graph.vertices
    )
    _collapsible_cache[key] = result
    return result


def is_d_graph(graph: Graph, d: int) -> bool:
    """Every unit sphere is a (d-1)-graph that is a (d-1)-sphere."""
    if d < -1:
        return False
    if d == -1:
        return graph.n == 0
    if graph.n == 0:
        return False
    key = (_memo_key(graph), d)
    got = _dgraph_cache.get(key)
    if got is not None:
        return got
    result = all(is_d_sphere(graph.unit_sphere(x), d - 1) for x in graph.vertices)
    _dgraph_cache[key] = result
    return result


def is_d_sphere(graph: Graph, d: int, strict: bool = False) -> bool:
    """d-graph that becomes collapsible when one vertex is removed.

    By default one such vertex suffices; strict=True demands every
    vertex removal leave a collapsible graph.
    """
    if d == -1:
        return graph.n == 0
    if graph.n == 0:
        return False
    key = (_memo_key(graph), d, strict)
    got = _sphere_cache.get(key)
    if got is not None:
        return got
    if not is_d_graph(graph, d):
        result = False
    else:
        quant = all if strict else any
        result = quant(is_collapsible(graph.delete_vertex(x)) for x in graph.vertices)
    _sphere_cache[key] = result
    return result


def boundary_vertices(graph: Graph) -> tuple[int, ...]:
    """Vertices whose unit sphere is collapsible."""
    return tuple(v for v in graph.vertices if is_collapsible(graph.unit_sphere(v)))
