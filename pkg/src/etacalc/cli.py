"""Batch command-line front end.

The CLI is a thin client of the HTTP service: by default it talks to an
in-process ASGI app, or to a remote server when ETA_SERVER is set.

Exit codes: 0 ok, 1 usage/parse error, 2 a verified identity failed,
3 size cap exceeded.
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx

from .service import app


def _client():
    server = os.environ.get("ETA_SERVER")
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient  # synchronous in-process transport

    return TestClient(app, raise_server_exceptions=False)


def _post(path: str, payload: dict) -> dict:
    with _client() as client:
        resp = client.post(path, json=payload)
    if resp.status_code == 422 and "cap" in str(resp.json().get("detail", "")):
        click.echo(f"error: {resp.json()['detail']}", err=True)
        sys.exit(3)
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text)
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    return resp.json()


def _input_payload(gen, params, facets, faces, input_path) -> dict:
    sources = sum(x is not None for x in (gen, facets, faces, input_path))
    if sources != 1:
        click.echo("error: provide exactly one of --gen/--facets/--faces/--input", err=True)
        sys.exit(1)
    if gen is not None:
        parsed = []
        for p in params:
            try:
                parsed.append(int(p))
            except ValueError:
                parsed.append(p)
        return {"generator": gen, "params": parsed}
    if facets is not None:
        try:
            return {"facets": json.loads(facets)}
        except json.JSONDecodeError as exc:
            click.echo(f"error: bad facets JSON: {exc}", err=True)
            sys.exit(1)
    if faces is not None:
        try:
            return {"faces": json.loads(faces)}
        except json.JSONDecodeError as exc:
            click.echo(f"error: bad faces JSON: {exc}", err=True)
            sys.exit(1)
    try:
        text = open(input_path).read()
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        if "facets" in data:
            return {"facets": data["facets"]}
        if "faces" in data:
            return {"faces": data["faces"]}
        click.echo('error: JSON input needs "facets" or "faces"', err=True)
        sys.exit(1)
    return {"edge_list": text}


def input_options(fn):
    fn = click.option("--gen", default=None, help="named generator")(fn)
    fn = click.option(
        "--params", multiple=True, help="generator parameter (repeatable)"
    )(fn)
    fn = click.option("--facets", default=None, help="facet list as JSON")(fn)
    fn = click.option("--faces", default=None, help="verbatim face list as JSON")(fn)
    fn = click.option(
        "--input", "input_path", default=None, help="edge-list or complex JSON file"
    )(fn)
    return fn


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text"
)


@click.group()
def main() -> None:
    """Exact connection-Laplacian calculus for simplicial complexes."""


@main.command()
@input_options
@format_option
def gen(gen, params, facets, faces, input_path, fmt):
    """Emit a generated graph as an edge list."""
    data = _post("/gen", {"input": _input_payload(gen, params, facets, faces, input_path)})
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
        return
    for u, v in data["edges"]:
        click.echo(f"{u} {v}")
    covered = {v for e in data["edges"] for v in e}
    for v in data["vertices"]:
        if v not in covered:
            click.echo(str(v))


@main.command()
@input_options
@format_option
def analyze(gen, params, facets, faces, input_path, fmt):
    """Run the full identity suite; exit 2 on any failed identity."""
    data = _post(
        "/analyze", {"input": _input_payload(gen, params, facets, faces, input_path)}
    )
    report = data["report"]
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        for key in (
            "fvector", "fvector_refined", "chi", "fermi", "eta", "eta0", "eta1",
            "eta_generating", "eta_column", "trace_L", "trace_g", "energy",
            "betti", "inertia",
        ):
            click.echo(f"{key}: {report[key]}")
        for name, ok in report["checks"].items():
            click.echo(f"check {name}: {'pass' if ok else 'FAIL'}")
    if not data["all_pass"]:
        sys.exit(2)


@main.command()
@input_options
@format_option
@click.option("-n", "iterations", default=1, help="refinement iterations")
@click.option("--cap", default=20000, help="abort above this projected face count")
def refine(gen, params, facets, faces, input_path, fmt, iterations, cap):
    """Barycentric refinement, iterated; prints the f-vector and faces."""
    data = _post(
        "/refine",
        {
            "input": _input_payload(gen, params, facets, faces, input_path),
            "iterations": iterations,
            "face_cap": cap,
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(f"fvector: {data['fvector']}")
        for f in data["faces"]:
            click.echo(" ".join(str(v) for v in f))


@main.command()
@input_options
@format_option
@click.option("--which", default="L", help="L | g | A | J | boundary:k")
def matrix(gen, params, facets, faces, input_path, fmt, which):
    """Dump a matrix in canonical face order."""
    data = _post(
        "/matrix",
        {
            "input": _input_payload(gen, params, facets, faces, input_path),
            "which": which,
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        for row in data["matrix"]:
            click.echo(" ".join(str(x) for x in row))


@main.command()
@input_options
@format_option
@click.option("--tol", default=1e-10, help="Jacobi sweep tolerance")
def spectrum(gen, params, facets, faces, input_path, fmt, tol):
    """Floating eigenvalues plus exact inertia of L."""
    data = _post(
        "/spectrum",
        {"input": _input_payload(gen, params, facets, faces, input_path), "tol": tol},
    )
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(" ".join(f"{x:.6f}" for x in data["eigenvalues"]))
        neg, zero, pos = data["inertia"]
        click.echo(f"inertia: {neg}/{zero}/{pos}")


@main.command()
@format_option
@click.option("--er", "er_count", default=0, help="number of random graphs")
@click.option("--n", default=8, help="random graph order")
@click.option("--p", default="1/2", help="edge probability (exact rational)")
@click.option("--seed", default=0)
def verify(fmt, er_count, n, p, seed):
    """Identity suite across named generators plus a random corpus."""
    data = _post(
        "/verify", {"er_count": er_count, "er_n": n, "er_p": p, "seed": seed}
    )
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        for row in data["results"]:
            click.echo(f"{row['name']}: {'pass' if row['pass'] else 'FAIL'}")
    if not data["all_pass"]:
        sys.exit(2)


@main.command()
@format_option
@click.option(
    "--objective",
    type=click.Choice(["min-eta", "max-green-trace", "neg-eig", "variety"]),
    required=True,
)
@click.option("--faces", default=26, help="face count (local search / cap)")
@click.option("--budget", default=10000.0, help="local search move budget")
@click.option("--seed", default=1)
@click.option("--max-vertices", default=4, help="scan corpus vertex bound")
@click.option("--threads", default=int(os.environ.get("ETA_THREADS", "1")))
def search(fmt, objective, faces, budget, seed, max_vertices, threads):
    """Stochastic / exhaustive search over the open-question objectives."""
    data = _post(
        "/search",
        {
            "objective": objective,
            "faces": faces,
            "budget": int(budget),
            "seed": seed,
            "max_vertices": max_vertices,
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        res = data["result"]
        click.echo(f"objective: {res['objective']}")
        click.echo(f"best: {res['best_value']}")
        click.echo(f"examined: {res['examined']}")
        for note in res["notes"]:
            click.echo(f"note: {note}")


@main.command()
@format_option
@click.option("-k", required=True, type=int)
def enumerate(fmt, k):
    """Isomorphism-free connected graphs on k vertices."""
    data = _post("/enumerate", {"k": k})
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(f"count: {data['count']}")
        for edges in data["graphs"]:
            click.echo(";".join(f"{u}-{v}" for u, v in edges))


@main.command()
@format_option
@click.option("--n", default=8)
@click.option("--p", default="1/2")
@click.option("--trials", default=10000)
@click.option("--seed", default=0)
def expect(fmt, n, p, trials, seed):
    """Closed-form and Monte-Carlo expectation of chi on G(n, p)."""
    data = _post("/expect", {"n": n, "p": p, "trials": trials, "seed": seed})
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        num = data["exact"]["numerator"]
        den = data["exact"]["denominator"]
        click.echo(f"exact: {num}/{den} = {data['exact_float']:.6f}")
        if data["monte_carlo"] is not None:
            click.echo(f"monte carlo ({data['trials']} trials): {data['monte_carlo']:.6f}")


@main.command()
@format_option
@click.option("--n", required=True, type=int)
def mertens(fmt, n):
    """Verify chi(prime graph complex) = 1 - M(n) for all 2..n."""
    data = _post("/mertens", {"n": n})
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        for row in data["rows"]:
            click.echo(
                f"n={row['n']}: M={row['mertens']} {'ok' if row['ok'] else 'FAIL'}"
            )
    if not data["all_ok"]:
        sys.exit(2)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
