"""Exact connection-Laplacian calculus for finite simplicial complexes."""

from .complexes import GenPoly, SimplicialComplex
from .graphs import Graph, whitney_complex
from .constructions import (
    barycentric_refinement,
    connection_graph,
    named_generator,
)
from .functionals import EtaBundle, Report, eta, eta0, eta1, eta_bundle, identity_suite
from .linalg import connection_laplacian, green_function

__all__ = [
    "GenPoly",
    "SimplicialComplex",
    "Graph",
    "whitney_complex",
    "barycentric_refinement",
    "connection_graph",
    "named_generator",
    "EtaBundle",
    "Report",
    "eta",
    "eta0",
    "eta1",
    "eta_bundle",
    "identity_suite",
    "connection_laplacian",
    "green_function",
]
