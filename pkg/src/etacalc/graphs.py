"""Finite simple undirected graphs and clique (Whitney) complexes."""

from __future__ import annotations

from typing import Iterable, Iterator

from .complexes import InputError, SimplicialComplex


class Graph:
    """Simple undirected graph over integer vertex labels.

    Immutable by convention: neighbor sets are built once and must not
    be mutated afterwards.
    """

    __slots__ = ("vertices", "adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vs = tuple(sorted(set(vertices)))
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, w in edges:
            if u == w:
                raise InputError(f"loop at vertex {u}")
            if u not in adj or w not in adj:
                raise InputError(f"edge ({u},{w}) uses an unknown vertex")
            adj[u].add(w)
            adj[w].add(u)
        self.vertices = vs
        self.adj = adj

    # -- basics ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (v, w) for v in self.vertices for w in self.adj[v] if v < w
        )

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges() == other.edges()
        )

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph({self.n} vertices, {self.m} edges)"

    # -- derived graphs ----------------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        ks = set(keep)
        for v in ks:
            if v not in self.adj:
                raise InputError(f"unknown vertex {v}")
        return Graph(ks, ((u, w) for u in ks for w in self.adj[u] if w in ks and u < w))

    def unit_sphere(self, v: int) -> "Graph":
        """Induced subgraph on the neighbors of v (v itself removed)."""
        if v not in self.adj:
            raise InputError(f"unknown vertex {v}")
        return self.subgraph(self.adj[v])

    def delete_vertex(self, v: int) -> "Graph":
        if v not in self.adj:
            raise InputError(f"unknown vertex {v}")
        return self.subgraph(u for u in self.vertices if u != v)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        return Graph(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[w]) for u, w in self.edges()),
        )

    # -- connectivity ----------------------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def cliques(graph: Graph) -> Iterator[tuple[int, ...]]:
    """Enumerate all non-empty cliques as sorted vertex tuples.

    Cliques are grown by appending neighbors larger than the current
    maximum, so every clique is produced exactly once.
    """
    order = graph.vertices
    pos = {v: i for i, v in enumerate(order)}

    def grow(cur: tuple[int, ...], candidates: list[int]) -> Iterator[tuple[int, ...]]:
        yield cur
        for i, v in enumerate(candidates):
            yield from grow(
                cur + (v,), [w for w in candidates[i + 1:] if graph.has_edge(v, w)]
            )

    for i, v in enumerate(order):
        yield from grow((v,), [w for w in order[i + 1:] if graph.has_edge(v, w)])


def whitney_complex(graph: Graph, max_dim: int | None = None) -> SimplicialComplex:
    """Complex of all complete subgraphs, optionally dimension-capped."""
    if max_dim is None:
        faces = tuple(cliques(graph))
    else:
        faces = tuple(c for c in cliques(graph) if len(c) <= max_dim + 1)
    return SimplicialComplex(faces, _validated=max_dim is None)


def graph_chi(graph: Graph) -> int:
    """Euler characteristic of the Whitney complex (0 for the empty graph)."""
    return whitney_complex(graph).euler_characteristic()


# -- edge-list text format ---------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the `u v` one-pair-per-line format; `#` starts a comment.

    A line with a single label declares an isolated vertex.
    """
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            labels = [int(p) for p in parts]
        except ValueError as exc:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from exc
        if len(labels) == 1:
            vertices.add(labels[0])
        elif len(labels) == 2:
            vertices.update(labels)
            edges.append((labels[0], labels[1]))
        else:
            raise InputError(f"line {lineno}: expected `u v`, got {line!r}")
    return Graph(vertices, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"{u} {v}" for u, v in graph.edges()]
    covered = {v for e in graph.edges() for v in e}
    lines += [str(v) for v in graph.vertices if v not in covered]
    return "\n".join(lines) + ("\n" if lines else "")
