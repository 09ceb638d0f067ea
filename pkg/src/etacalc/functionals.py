"""The hydrogen-trace functional in all its formulations, curvatures,
and the identity suite tying the exact theorems together."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from .complexes import GenPoly, SimplicialComplex
from .constructions import (
    LabeledGraph,
    SplitMix64,
    apply_operator,
    barycentric_operator,
    barycentric_refinement,
    connection_graph,
    prime_graph,
    zykov_join,
)
from .graphs import Graph, graph_chi, whitney_complex
from . import linalg


# -- eta in its five formulations ------------------------------------------

def sphere_chi_profile(graph: Graph) -> dict[int, int]:
    """chi of the Whitney complex of each unit sphere."""
    return {v: graph_chi(graph.unit_sphere(v)) for v in graph.vertices}


def eta0(graph: Graph) -> int:
    """Sum over vertices of the sphere Euler characteristic."""
    return sum(sphere_chi_profile(graph).values())


def eta1(complex_: SimplicialComplex) -> int:
    """eta0 of the Barycentric refinement; equals eta by Gauss-Bonnet."""
    return eta0(barycentric_refinement(complex_).graph)


def eta(complex_: SimplicialComplex) -> int:
    """tr(L - g), the trace of the hydrogen operator."""
    if not complex_.faces:
        return 0
    lap = linalg.connection_laplacian(complex_)
    green = linalg.green_function(complex_)
    return linalg.trace(lap) - linalg.trace(green)


def green_trace(complex_: SimplicialComplex) -> int:
    if not complex_.faces:
        return 0
    return linalg.trace(linalg.green_function(complex_))


def _refined_fvector(complex_: SimplicialComplex) -> tuple[int, ...]:
    return whitney_complex(barycentric_refinement(complex_).graph).f_vector()


def eta_generating(complex_: SimplicialComplex) -> int:
    """f1'(0) - f1'(-1) for the refinement's reduced generating function."""
    if not complex_.faces:
        return 0
    poly = GenPoly((1,) + _refined_fvector(complex_))
    d = poly.derivative()
    value = d(0) - d(-1)
    assert value.denominator == 1
    return value.numerator


def eta_curvature(complex_: SimplicialComplex) -> int:
    """Dot product of the refinement f-vector with (0, 2, -3, 4, -5, ...)."""
    fv = _refined_fvector(complex_)
    return sum((-1) ** (k + 1) * (k + 1) * vk for k, vk in enumerate(fv) if k >= 1)


def eta_column(complex_: SimplicialComplex) -> int:
    """-sum_i <A_i, g A_i> over the columns A_i of the connection adjacency."""
    if not complex_.faces:
        return 0
    adj = linalg.connection_adjacency(complex_)
    green = linalg.green_function(complex_)
    ga = linalg.mat_mul(green, adj)
    n = len(adj)
    return -sum(adj[k][i] * ga[k][i] for i in range(n) for k in range(n))


@dataclass(frozen=True)
class EtaBundle:
    """All five eta formulations; they agree on every complex."""

    eta_trace: int
    eta_gauss_bonnet: int
    eta_generating: int
    eta_curvature_g2: int
    eta_column: int

    def all_equal(self) -> bool:
        vals = {
            self.eta_trace,
            self.eta_gauss_bonnet,
            self.eta_generating,
            self.eta_curvature_g2,
            self.eta_column,
        }
        return len(vals) == 1


def eta_bundle(complex_: SimplicialComplex) -> EtaBundle:
    return EtaBundle(
        eta_trace=eta(complex_),
        eta_gauss_bonnet=eta1(complex_),
        eta_generating=eta_generating(complex_),
        eta_curvature_g2=eta_curvature(complex_),
        eta_column=eta_column(complex_),
    )


# -- curvatures -----------------------------------------------------------------

@dataclass(frozen=True)
class CurvatureProfile:
    sphere_chi: dict[int, int]          # graph vertex -> chi(S(x))
    euler_curvature: dict[int, Fraction]  # graph vertex -> K(x)


def euler_curvature(graph: Graph) -> CurvatureProfile:
    """Per-vertex Euler curvature K(x) = sum_k (-1)^k v_{k-1}(S(x))/(k+1).

    Cross-checked against F(0) - F(-1) with F the antiderivative of the
    sphere's reduced generating function.
    """
    chi_map = {}
    curv = {}
    for v in graph.vertices:
        sphere = whitney_complex(graph.unit_sphere(v))
        chi_map[v] = sphere.euler_characteristic()
        fv = sphere.f_vector()
        k_direct = Fraction(1) + sum(
            (Fraction((-1) ** (k + 1), k + 2) * vk for k, vk in enumerate(fv)),
            Fraction(0),
        )
        anti = sphere.generating_function(reduced=True).antiderivative()
        k_poly = anti(0) - anti(-1)
        if k_direct != k_poly:
            raise linalg.ConsistencyError(
                f"curvature formulas disagree at vertex {v}"
            )
        curv[v] = k_direct
    return CurvatureProfile(sphere_chi=chi_map, euler_curvature=curv)


def zykov_eta0_formula_check(g: Graph, h: Graph) -> bool:
    """Compare eta0 of the Zykov join, computed directly, against the
    product-rule formula on reduced generating functions."""
    direct = eta0(zykov_join(g, h))
    prod = whitney_complex(g).generating_function(reduced=True) * whitney_complex(
        h
    ).generating_function(reduced=True)
    d = prod.derivative()
    formula = d(0) - d(-1)
    return formula == direct


# -- random-graph expectation --------------------------------------------------

def expectation_chi(n: int, p) -> Fraction:
    """Closed-form E[chi] = sum_k (-1)^(k+1) C(n,k) p^C(k,2) on G(n, p)."""
    if n < 1:
        raise ValueError("need n >= 1")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    return sum(
        (
            Fraction((-1) ** (k + 1) * math.comb(n, k)) * p ** math.comb(k, 2)
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


def monte_carlo_chi(n: int, p, trials: int, seed: int = 0) -> float:
    """Mean Whitney-complex chi over seeded G(n, p) samples."""
    p = Fraction(p)
    rng = SplitMix64(seed)
    total = 0
    for _ in range(trials):
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if Fraction(rng.uniform()) < p:
                    edges.append((i, j))
        total += graph_chi(Graph(range(n), edges))
    return total / trials


# -- number theory ----------------------------------------------------------------

def mobius_sieve(n: int) -> list[int]:
    """mu(0..n) by sieving (mu(0) set to 0)."""
    mu = [1] * (n + 1)
    mu[0] = 0
    primes = []
    is_comp = [False] * (n + 1)
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def mertens(n: int) -> int:
    return sum(mobius_sieve(n)[1:])


def mertens_check(n: int) -> bool:
    """chi of the prime-graph Whitney complex equals 1 - M(n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return graph_chi(prime_graph(n)) == 1 - mertens(n)


# -- identity suite -----------------------------------------------------------------

REPORT_KEYS = (
    "fvector",
    "fvector_refined",
    "chi",
    "fermi",
    "eta",
    "eta0",
    "eta1",
    "eta_generating",
    "eta_column",
    "trace_L",
    "trace_g",
    "energy",
    "betti",
    "inertia",
    "checks",
)


@dataclass
class Report:
    """Flat record of every invariant and identity verdict for one complex."""

    fvector: tuple[int, ...]
    fvector_refined: tuple[int, ...]
    chi: int
    fermi: int
    eta: int
    eta0: int
    eta1: int
    eta_generating: int
    eta_column: int
    trace_L: int
    trace_g: int
    energy: int
    betti: tuple[int, ...]
    inertia: tuple[int, int, int]
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)

    def all_pass(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "fvector": list(self.fvector),
            "fvector_refined": list(self.fvector_refined),
            "chi": self.chi,
            "fermi": self.fermi,
            "eta": self.eta,
            "eta0": self.eta0,
            "eta1": self.eta1,
            "eta_generating": self.eta_generating,
            "eta_column": self.eta_column,
            "trace_L": self.trace_L,
            "trace_g": self.trace_g,
            "energy": self.energy,
            "betti": list(self.betti),
            "inertia": list(self.inertia),
            "checks": dict(self.checks),
            "witnesses": dict(self.witnesses),
        }


def _skeleton_graph(complex_: SimplicialComplex) -> Graph:
    edges = [f for f in complex_.faces if len(f) == 2]
    return Graph(complex_.vertices, edges)


def identity_suite(
    complex_: SimplicialComplex, source_graph: Graph | None = None
) -> Report:
    """Evaluate every exact identity on one complex.

    eta0 is computed on source_graph when given (the graph whose Whitney
    complex this is), otherwise on the complex's 1-skeleton.
    """
    checks: dict[str, bool] = {}
    witnesses: dict[str, str] = {}

    def record(name: str, ok: bool, witness: str = "") -> None:
        checks[name] = bool(ok)
        if not ok and witness:
            witnesses[name] = witness

    if not complex_.faces:
        report = Report(
            fvector=(), fvector_refined=(), chi=0, fermi=1, eta=0, eta0=0,
            eta1=0, eta_generating=0, eta_column=0, trace_L=0, trace_g=0,
            energy=0, betti=(), inertia=(0, 0, 0),
        )
        report.checks["empty_complex"] = True
        return report

    fv = complex_.f_vector()
    chi = complex_.euler_characteristic()
    fermi = complex_.fermi_characteristic()

    refinement = barycentric_refinement(complex_)
    conn = connection_graph(complex_)
    g1 = refinement.graph
    refined_complex = whitney_complex(g1)
    fv1 = refined_complex.f_vector()

    lap = linalg.connection_laplacian(complex_)
    green = linalg.green_function(complex_)
    n = len(lap)
    omega = linalg.omega_vector(complex_)

    tr_l = linalg.trace(lap)
    tr_g = linalg.trace(green)
    e = linalg.total_sum(green)

    graph_for_eta0 = source_graph if source_graph is not None else _skeleton_graph(
        complex_
    )

    det = linalg.determinant(lap)
    record(
        "det_unimodular",
        det in (-1, 1) and det == fermi,
        f"det={det}, fermi={fermi}",
    )
    record(
        "green_inverse",
        linalg.mat_mul(lap, green) == linalg.identity_matrix(n),
    )

    sphere_chis = sphere_chi_profile(g1)
    bad = next(
        (x for x in range(n) if green[x][x] != 1 - sphere_chis[x]), None
    )
    record(
        "green_diag_sphere",
        bad is None,
        "" if bad is None else f"face index {bad} ({complex_.faces[bad]})",
    )

    record("energy_chi", e == chi, f"energy={e}, chi={chi}")
    str_l = linalg.super_trace(lap, omega)
    str_g = linalg.super_trace(green, omega)
    record(
        "supertrace_chi",
        str_l == chi and str_g == chi,
        f"str(L)={str_l}, str(g)={str_g}, chi={chi}",
    )

    eta_tr = tr_l - tr_g
    bundle = EtaBundle(
        eta_trace=eta_tr,
        eta_gauss_bonnet=sum(sphere_chis.values()),
        eta_generating=eta_generating(complex_),
        eta_curvature_g2=eta_curvature(complex_),
        eta_column=eta_column(complex_),
    )
    record("eta_bundle", bundle.all_equal(), repr(bundle))

    try:
        linalg.wu_characteristic(complex_)
        record("wu_consistent", True)
    except linalg.ConsistencyError as exc:
        record("wu_consistent", False, str(exc))

    b = linalg.betti(complex_)
    record(
        "euler_poincare",
        sum((-1) ** k * bk for k, bk in enumerate(b)) == chi,
        f"betti={b}, chi={chi}",
    )
    hodge = linalg.hodge_laplacian(complex_)
    record("hodge_supertrace", linalg.super_trace(hodge, omega) == 0)

    inert = linalg.inertia(lap)
    record("inertia_nonsingular", inert.zero == 0, f"inertia={inert.as_tuple()}")

    record("zeta_det", linalg.bowen_lanford_zeta(complex_, -1) == det)

    v_bad = None
    for x in range(n):
        vx = sum(green[x])
        if vx != omega[x] * green[x][x]:
            v_bad = x
            break
    record(
        "curvature_v",
        v_bad is None and e == chi,
        "" if v_bad is None else f"face index {v_bad}",
    )

    handshake = linalg.total_sum(lap) == conn.graph.n + 2 * conn.graph.m
    record("handshake", handshake)

    record(
        "refinement_subgraph",
        all(conn.graph.has_edge(u, v) for u, v in g1.edges()),
    )

    op = barycentric_operator(complex_.dim)
    record(
        "stirling_fvector",
        apply_operator(op, fv) == fv1,
        f"S*f={apply_operator(op, fv)}, f1={fv1}",
    )
    record(
        "chi_refinement_invariant",
        refined_complex.euler_characteristic() == chi,
    )

    poly = complex_.generating_function()
    record("gen_chi", poly(0) - poly(-1) == chi)

    return Report(
        fvector=fv,
        fvector_refined=fv1,
        chi=chi,
        fermi=fermi,
        eta=eta_tr,
        eta0=eta0(graph_for_eta0),
        eta1=bundle.eta_gauss_bonnet,
        eta_generating=bundle.eta_generating,
        eta_column=bundle.eta_column,
        trace_L=tr_l,
        trace_g=tr_g,
        energy=e,
        betti=b,
        inertia=inert.as_tuple(),
        checks=checks,
        witnesses=witnesses,
    )
