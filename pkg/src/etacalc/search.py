"""Exhaustive and stochastic search over small graphs and complexes:
extremal-value audits and counterexample scans for the open questions."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .complexes import SimplicialComplex
from .constructions import SplitMix64, canonical_key, graph_from_key
from .functionals import eta, eta0
from .graphs import Graph, whitney_complex
from . import linalg

KNOWN_ETA0_TABLE = {
    # published extremal rows for connected graphs on k vertices
    2: (2, 2),
    3: (3, 3),
    4: (4, 8),
    5: (4, 12),
    6: (0, 18),
}


@dataclass
class SearchResult:
    objective: str
    best_value: int
    witness: dict
    examined: int
    seed: int | None = None
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "best_value": self.best_value,
            "witness": self.witness,
            "examined": self.examined,
            "seed": self.seed,
            "wall_time": round(self.wall_time, 3),
            "notes": list(self.notes),
        }


def _graph_witness(graph: Graph) -> dict:
    return {"vertices": list(graph.vertices), "edges": [list(e) for e in graph.edges()]}


def _complex_witness(complex_: SimplicialComplex) -> dict:
    return {"faces": [list(f) for f in complex_.faces]}


def witness_graph(witness: dict) -> Graph:
    return Graph(witness["vertices"], [tuple(e) for e in witness["edges"]])


def witness_complex(witness: dict) -> SimplicialComplex:
    return SimplicialComplex.validate(witness["faces"])


# -- isomorphism-free enumeration -----------------------------------------------

def enumerate_connected_graphs(k: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on k
    vertices, in increasing canonical bit-string order.

    Brute force over all labeled graphs with canonical-form dedup; fine
    up to k = 7, increasingly expensive beyond.
    """
    if not 2 <= k <= 8:
        raise ValueError("enumeration supported for 2 <= k <= 8")
    pairs = list(combinations(range(k), 2))
    seen: set[tuple[int, int]] = set()
    keys = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if (mask >> b) & 1]
        if len(edges) < k - 1:
            continue
        g = Graph(range(k), edges)
        if not g.is_connected():
            continue
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            keys.append(key)
    for key in sorted(keys):
        yield graph_from_key(key)


def extremal_eta0(k: int) -> SearchResult:
    """Exact min/max of eta0 over connected graphs on k vertices."""
    if not 2 <= k <= 7:
        raise ValueError("extremal audit supported for 2 <= k <= 7")
    start = time.monotonic()
    best_min = best_max = None
    wit_min = wit_max = None
    examined = 0
    for g in enumerate_connected_graphs(k):
        examined += 1
        val = eta0(g)
        if best_min is None or val < best_min:
            best_min, wit_min = val, g
        if best_max is None or val > best_max:
            best_max, wit_max = val, g
    result = SearchResult(
        objective=f"extremal-eta0-k{k}",
        best_value=best_max,
        witness={
            "min": {"value": best_min, "graph": _graph_witness(wit_min)},
            "max": {"value": best_max, "graph": _graph_witness(wit_max)},
        },
        examined=examined,
        wall_time=time.monotonic() - start,
    )
    if k in KNOWN_ETA0_TABLE:
        lo, hi = KNOWN_ETA0_TABLE[k]
        if (best_min, best_max) != (lo, hi):
            result.notes.append(
                f"table audit: published C({k}) row is [{lo}, {hi}] "
                f"but exhaustive search gives [{best_min}, {best_max}]"
            )
    return result


# -- stochastic local search on complexes ----------------------------------------

def _addable_faces(complex_: SimplicialComplex) -> list[tuple[int, ...]]:
    """Absent faces all of whose proper subsets are present."""
    have = set(complex_.faces)
    verts = complex_.vertices
    out = []
    # candidate = vertex pair/extension of an existing face by one vertex
    for f in complex_.faces:
        for v in verts:
            if v in f:
                continue
            cand = tuple(sorted(f + (v,)))
            if cand in have:
                continue
            if all(
                cand[:i] + cand[i + 1:] in have for i in range(len(cand))
            ):
                out.append(cand)
    return sorted(set(out))


def _removable_faces(complex_: SimplicialComplex) -> list[tuple[int, ...]]:
    """Faces not properly contained in any other (top-dimensional)."""
    return list(complex_.facets())


def green_trace_fast(complex_: SimplicialComplex) -> int:
    """tr(g) via g(x,x) = 1 - chi(S(x)) on the refinement, avoiding the
    matrix inverse."""
    from .constructions import barycentric_refinement
    from .functionals import sphere_chi_profile

    g1 = barycentric_refinement(complex_).graph
    return sum(1 - c for c in sphere_chi_profile(g1).values())


def search_green_trace(n_faces: int, budget: int, seed: int = 0) -> SearchResult:
    """Stochastic local search maximizing tr(g) at a fixed face count.

    Moves pair one face insertion with one facet deletion so the face
    count stays invariant; improving or equal moves are accepted.
    """
    if n_faces < 1:
        raise ValueError("need n_faces >= 1")
    start = time.monotonic()
    rng = SplitMix64(seed)
    current = SimplicialComplex.validate([[v] for v in range(n_faces)])
    cur_val = green_trace_fast(current)
    best_val, best = cur_val, current
    examined = 1
    for _ in range(budget):
        adds = _addable_faces(current)
        if not adds:
            break
        add = adds[rng.randrange(len(adds))]
        grown = SimplicialComplex(current.faces + (add,), _validated=True)
        removables = [f for f in _removable_faces(grown) if f != add]
        if not removables:
            continue
        rem = removables[rng.randrange(len(removables))]
        candidate = SimplicialComplex(
            tuple(f for f in grown.faces if f != rem), _validated=True
        )
        if len(candidate.faces) != n_faces or not candidate.vertices:
            continue
        examined += 1
        val = green_trace_fast(candidate)
        if val >= cur_val:
            current, cur_val = candidate, val
            if val > best_val:
                best_val, best = val, candidate
    # re-validate the witness through the exact matrix route
    exact = (
        linalg.trace(linalg.green_function(best)) if best.faces else 0
    )
    result = SearchResult(
        objective="max-green-trace",
        best_value=best_val,
        witness=_complex_witness(best),
        examined=examined,
        seed=seed,
        wall_time=time.monotonic() - start,
    )
    if exact != best_val:
        result.notes.append(
            f"witness re-validation failed: fast={best_val}, exact={exact}"
        )
    return result


# -- counterexample scans ----------------------------------------------------------

def negative_eigenvalue_scan(complexes: Iterable[SimplicialComplex]) -> SearchResult:
    """Look for a connection Laplacian without negative eigenvalues.

    Complexes without any edge are skipped: a disjoint union of points
    has L = identity, a known trivial shape with no negative spectrum.
    """
    start = time.monotonic()
    examined = 0
    skipped = 0
    counterexample = None
    for cx in complexes:
        if cx.dim < 1:
            skipped += 1
            continue
        examined += 1
        inert = linalg.inertia(linalg.connection_laplacian(cx))
        if inert.negative == 0:
            counterexample = cx
            break
    result = SearchResult(
        objective="neg-eig",
        best_value=0 if counterexample is None else 1,
        witness={} if counterexample is None else _complex_witness(counterexample),
        examined=examined,
        wall_time=time.monotonic() - start,
    )
    result.notes.append(
        "counterexample found" if counterexample is not None
        else "no counterexample: every scanned L has a negative eigenvalue"
    )
    if skipped:
        result.notes.append(
            f"skipped {skipped} edge-free complexes (L = identity is trivial)"
        )
    return result


def _singular_vertices(graph: Graph, d: int) -> list[int]:
    from .constructions import is_d_graph

    return [v for v in graph.vertices if not is_d_graph(graph.unit_sphere(v), d - 1)]


def is_d_variety_with_isolated_singularities(graph: Graph, d: int) -> bool:
    """Unit spheres are (d-1)-graphs except on an independent vertex set."""
    singular = _singular_vertices(graph, d)
    return all(
        not graph.has_edge(u, v) for i, u in enumerate(singular) for v in singular[i + 1:]
    )


def variety_eta_scan(graphs: Iterable[Graph], d: int = 2) -> SearchResult:
    """Flag any d-variety (isolated singularities) with negative eta."""
    start = time.monotonic()
    examined = 0
    excluded = 0
    flagged = None
    for g in graphs:
        if not is_d_variety_with_isolated_singularities(g, d):
            excluded += 1
            continue
        examined += 1
        val = eta(whitney_complex(g))
        if val < 0:
            flagged = (g, val)
            break
    result = SearchResult(
        objective="variety",
        best_value=0 if flagged is None else flagged[1],
        witness={} if flagged is None else _graph_witness(flagged[0]),
        examined=examined,
        wall_time=time.monotonic() - start,
    )
    result.notes.append(
        "no member with eta < 0" if flagged is None
        else f"found variety with eta = {flagged[1]}"
    )
    if excluded:
        result.notes.append(
            f"excluded {excluded} graphs with non-isolated singular set"
        )
    return result
