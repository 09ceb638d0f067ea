"""HTTP service exposing the calculus: one endpoint per batch command.

Inputs are either a named generator, a facet/face list, or an edge-list
text blob; exactly one source per request.  All responses carry
"schema": 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from .complexes import InputError, ClosureError, SimplicialComplex
from .constructions import (
    apply_operator,
    barycentric_operator,
    barycentric_refinement,
    erdos_renyi,
    named_generator,
)
from .graphs import Graph, parse_edge_list, whitney_complex
from .functionals import (
    expectation_chi,
    identity_suite,
    mertens,
    mertens_check,
    monte_carlo_chi,
)
from . import linalg, search

SCHEMA_VERSION = 1

app = FastAPI(title="etacalc", version="0.1.0")


# -- request / response models ---------------------------------------------

class ComplexInput(BaseModel):
    """One input source: generator, facets, verbatim faces, or edge list."""

    generator: Optional[str] = None
    params: list = Field(default_factory=list)
    facets: Optional[list[list[int]]] = None
    faces: Optional[list[list[int]]] = None
    edge_list: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self):
        sources = [
            self.generator is not None,
            self.facets is not None,
            self.faces is not None,
            self.edge_list is not None,
        ]
        if sum(sources) != 1:
            raise ValueError("exactly one input source required")
        return self

    def resolve(self) -> tuple[SimplicialComplex, Optional[Graph]]:
        """Return (complex, source graph or None)."""
        try:
            if self.generator is not None:
                g = named_generator(self.generator, self.params)
                return whitney_complex(g), g
            if self.edge_list is not None:
                g = parse_edge_list(self.edge_list)
                return whitney_complex(g), g
            if self.facets is not None:
                return SimplicialComplex.closure(self.facets), None
            return SimplicialComplex.validate(self.faces), None
        except (InputError, ClosureError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc


class AnalyzeRequest(BaseModel):
    input: ComplexInput


class RefineRequest(BaseModel):
    input: ComplexInput
    iterations: int = 1
    face_cap: int = 20_000


class MatrixRequest(BaseModel):
    input: ComplexInput
    which: str = "L"  # L | g | A | J | boundary:k


class SpectrumRequest(BaseModel):
    input: ComplexInput
    tol: float = 1e-10


class VerifyRequest(BaseModel):
    generators: list[str] = Field(
        default_factory=lambda: [
            "house",
            "octahedron",
            "doublepyramid",
            "cross16",
        ]
    )
    er_count: int = 0
    er_n: int = 8
    er_p: str = "1/2"
    seed: int = 0


class SearchRequest(BaseModel):
    objective: Literal["min-eta", "max-green-trace", "neg-eig", "variety"]
    faces: int = 26
    budget: int = 10_000
    seed: int = 1
    max_vertices: int = 4
    dimension: int = 2


class EnumerateRequest(BaseModel):
    k: int


class ExpectRequest(BaseModel):
    n: int = 8
    p: str = "1/2"
    trials: int = 10_000
    seed: int = 0


class MertensRequest(BaseModel):
    n: int


def _versioned(payload: dict) -> dict:
    return {"schema": SCHEMA_VERSION, **payload}


# -- endpoints -----------------------------------------------------------------

@app.get("/health")
def health() -> dict:
    return _versioned({"status": "ok"})


@app.post("/gen")
def gen(req: AnalyzeRequest) -> dict:
    cx, graph = req.input.resolve()
    if graph is None:
        raise HTTPException(status_code=400, detail="gen needs a graph input")
    return _versioned(
        {
            "vertices": list(graph.vertices),
            "edges": [list(e) for e in graph.edges()],
            "fvector": list(cx.f_vector()),
        }
    )


@app.post("/analyze")
def analyze(req: AnalyzeRequest) -> dict:
    cx, graph = req.input.resolve()
    report = identity_suite(cx, source_graph=graph)
    return _versioned({"report": report.to_dict(), "all_pass": report.all_pass()})


@app.post("/refine")
def refine(req: RefineRequest) -> dict:
    cx, _ = req.input.resolve()
    if req.iterations < 1:
        raise HTTPException(status_code=400, detail="iterations must be >= 1")
    for _ in range(req.iterations):
        if cx.faces:
            projected = sum(apply_operator(barycentric_operator(cx.dim), cx.f_vector()))
            if projected > req.face_cap:
                raise HTTPException(
                    status_code=422,
                    detail=f"refinement would exceed the {req.face_cap}-face cap",
                )
        cx = whitney_complex(barycentric_refinement(cx).graph)
    return _versioned(
        {
            "fvector": list(cx.f_vector()),
            "faces": [list(f) for f in cx.faces],
        }
    )


@app.post("/matrix")
def matrix(req: MatrixRequest) -> dict:
    cx, _ = req.input.resolve()
    which = req.which
    if which == "L":
        mat = linalg.connection_laplacian(cx)
    elif which == "g":
        mat = linalg.green_function(cx)
    elif which == "A":
        mat = linalg.connection_adjacency(cx)
    elif which == "J":
        mat = linalg.checkerboard(cx)
    elif which.startswith("boundary:"):
        try:
            k = int(which.split(":", 1)[1])
        except ValueError:
            raise HTTPException(status_code=400, detail=f"bad selector {which!r}")
        mat = linalg.boundary_operator(cx, k)
    else:
        raise HTTPException(status_code=400, detail=f"bad selector {which!r}")
    return _versioned({"which": which, "matrix": mat})


@app.post("/spectrum")
def spectrum(req: SpectrumRequest) -> dict:
    cx, _ = req.input.resolve()
    if req.tol <= 0:
        raise HTTPException(status_code=400, detail="tolerance must be positive")
    lap = linalg.connection_laplacian(cx)
    eigs = linalg.float_spectrum(lap, tol=req.tol)
    inert = linalg.inertia(lap)
    return _versioned({"eigenvalues": eigs, "inertia": list(inert.as_tuple())})


@app.post("/verify")
def verify(req: VerifyRequest) -> dict:
    results = []
    for name in req.generators:
        try:
            g = named_generator(name)
        except InputError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        report = identity_suite(whitney_complex(g), source_graph=g)
        results.append(
            {"name": name, "pass": report.all_pass(), "checks": report.checks}
        )
    try:
        p = Fraction(req.er_p)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=400, detail=f"bad probability {req.er_p!r}")
    for i in range(req.er_count):
        g = erdos_renyi(req.er_n, p, seed=req.seed + i)
        report = identity_suite(whitney_complex(g), source_graph=g)
        results.append(
            {
                "name": f"er(n={req.er_n},p={req.er_p},seed={req.seed + i})",
                "pass": report.all_pass(),
                "checks": report.checks,
            }
        )
    return _versioned(
        {"results": results, "all_pass": all(r["pass"] for r in results)}
    )


@app.post("/search")
def run_search(req: SearchRequest) -> dict:
    if req.objective in ("max-green-trace", "min-eta"):
        result = search.search_green_trace(req.faces, req.budget, seed=req.seed)
        if req.objective == "min-eta":
            # tr(L) is the face count, so min eta = faces - max tr(g)
            result.objective = "min-eta"
            result.best_value = req.faces - result.best_value
    elif req.objective == "neg-eig":
        corpus = (
            whitney_complex(g)
            for k in range(2, req.max_vertices + 1)
            for g in search.enumerate_connected_graphs(k)
        )
        result = search.negative_eigenvalue_scan(
            cx for cx in corpus if len(cx.faces) <= req.faces
        )
    else:
        graphs = (
            g
            for k in range(2, req.max_vertices + 1)
            for g in search.enumerate_connected_graphs(k)
        )
        result = search.variety_eta_scan(graphs, d=req.dimension)
    return _versioned({"result": result.to_dict()})


@app.post("/enumerate")
def enumerate_graphs(req: EnumerateRequest) -> dict:
    try:
        graphs = list(search.enumerate_connected_graphs(req.k))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return _versioned(
        {
            "k": req.k,
            "count": len(graphs),
            "graphs": [[list(e) for e in g.edges()] for g in graphs],
        }
    )


@app.post("/expect")
def expect(req: ExpectRequest) -> dict:
    try:
        p = Fraction(req.p)
        exact = expectation_chi(req.n, p)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    mc = monte_carlo_chi(req.n, p, req.trials, seed=req.seed) if req.trials else None
    return _versioned(
        {
            "n": req.n,
            "p": str(p),
            "exact": {"numerator": exact.numerator, "denominator": exact.denominator},
            "exact_float": float(exact),
            "monte_carlo": mc,
            "trials": req.trials,
        }
    )


@app.post("/mertens")
def mertens_endpoint(req: MertensRequest) -> dict:
    if req.n < 2:
        raise HTTPException(status_code=400, detail="need n >= 2")
    rows = []
    for n in range(2, req.n + 1):
        rows.append({"n": n, "mertens": mertens(n), "ok": mertens_check(n)})
    return _versioned({"rows": rows, "all_ok": all(r["ok"] for r in rows)})
