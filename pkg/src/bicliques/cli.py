"""Command-line client for the biclique service.

The CLI owns the files and talks to the service over HTTP: pass
``--server URL`` to use a running instance, or omit it to call an
in-process copy of the app through an ASGI transport (no server needed).
``bicliques serve`` starts the HTTP service itself.

Exit codes: 0 ok, 2 usage error, 124 timeout.
"""

from __future__ import annotations

import asyncio
import sys
from pathlib import Path

import click
import httpx

EXIT_TIMEOUT = 124

ALGORITHM_CHOICES = ("enum-mib", "oct-mib2", "mica", "oct-mica", "oracle-mib", "oracle-mb")
VARY_CHOICES = ("n_l", "n_r", "n_o", "d_lr", "d_cross", "d_o", "cv")


def _call(server: str | None, method: str, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.request(method, path, json=payload)

    async def _local() -> httpx.Response:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://bicliques.local", timeout=None
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(_local())


def _check(resp: httpx.Response) -> None:
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise click.UsageError(f"service error ({resp.status_code}): {detail}")


server_option = click.option(
    "--server", default=None, metavar="URL", help="Base URL of a running service; in-process if omitted."
)


@click.group()
def main() -> None:
    """Maximal biclique mining in near-bipartite graphs."""


@main.command()
@click.option("--nl", "n_l", type=click.IntRange(min=0), required=True, help="Size of L.")
@click.option("--nr", "n_r", type=click.IntRange(min=0), required=True, help="Size of R.")
@click.option("--no", "n_o", type=click.IntRange(min=0), required=True, help="Size of O.")
@click.option("--d-lr", type=click.FloatRange(0, 1), required=True, help="Expected L-R density.")
@click.option("--d-cross", type=click.FloatRange(0, 1), default=0.0, show_default=True, help="Expected O to L∪R density.")
@click.option("--d-o", type=click.FloatRange(0, 1), default=0.0, show_default=True, help="Expected density within O.")
@click.option("--cv", type=click.FloatRange(min=0), default=0.0, show_default=True, help="Degree cv for both phases.")
@click.option("--cv-lr", type=click.FloatRange(min=0), default=None, help="Override cv for R degrees.")
@click.option("--cv-cross", type=click.FloatRange(min=0), default=None, help="Override cv for O cross degrees.")
@click.option("--seed", type=int, default=0, show_default=True, help="PRNG seed.")
@click.option("-o", "--out", "out_prefix", required=True, help="Output prefix; writes <out>.graph and <out>.oct.")
@server_option
def generate(n_l, n_r, n_o, d_lr, d_cross, d_o, cv, cv_lr, cv_cross, seed, out_prefix, server) -> None:
    """Generate a seeded near-bipartite instance and write it to disk."""
    payload = {
        "n_l": n_l,
        "n_r": n_r,
        "n_o": n_o,
        "d_lr": d_lr,
        "d_cross": d_cross,
        "d_o": d_o,
        "cv_lr": cv_lr if cv_lr is not None else cv,
        "cv_cross": cv_cross if cv_cross is not None else cv,
        "seed": seed,
    }
    resp = _call(server, "POST", "/generate", payload)
    _check(resp)
    body = resp.json()
    Path(f"{out_prefix}.graph").write_text(body["graph_text"], encoding="utf-8")
    Path(f"{out_prefix}.oct").write_text(body["oct_text"], encoding="utf-8")
    click.echo(f"n={body['n']}")
    click.echo(f"m={body['m']}")
    for key, value in body["stats"].items():
        click.echo(f"{key}={value:.6f}")


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--algorithm", type=click.Choice(ALGORITHM_CHOICES), required=True)
@click.option("--oct", "oct_file", type=click.Path(exists=True, dir_okay=False), default=None, help="Decomposition file for oct-* algorithms.")
@click.option("--oct-heuristic", is_flag=True, help="Compute a greedy decomposition instead of reading one.")
@click.option("--oct-seed", type=int, default=0, show_default=True, help="Seed for the greedy heuristic.")
@click.option("--timeout", "timeout_s", type=click.FloatRange(min=0, min_open=True), default=None, help="Abort after this many seconds (exit code 124).")
@click.option("--list", "list_bicliques", is_flag=True, help="Stream canonical bicliques, one per line.")
@click.option("--count-only", is_flag=True, help="Keep only the dedup index; lower memory on large runs.")
@server_option
def enumerate(graph_file, algorithm, oct_file, oct_heuristic, oct_seed, timeout_s, list_bicliques, count_only, server) -> None:
    """Run one enumeration algorithm on a graph file."""
    payload = {
        "graph_text": Path(graph_file).read_text(encoding="utf-8"),
        "algorithm": algorithm,
        "oct_heuristic": oct_heuristic,
        "oct_seed": oct_seed,
        "timeout_s": timeout_s,
        "list_bicliques": list_bicliques,
        "count_only": count_only,
    }
    if oct_file is not None:
        payload["oct_text"] = Path(oct_file).read_text(encoding="utf-8")
    resp = _call(server, "POST", "/enumerate", payload)
    _check(resp)
    body = resp.json()
    click.echo(f"count={body['count']}")
    click.echo(f"wall_time_s={body['wall_time_s']:.6f}")
    if body.get("oct_time_s") is not None:
        click.echo(f"oct_time_s={body['oct_time_s']:.6f}")
    if body["timed_out"]:
        click.echo("timed_out=true")
    if body.get("bicliques") is not None:
        for line in body["bicliques"]:
            click.echo(line)
    if body["timed_out"]:
        sys.exit(EXIT_TIMEOUT)


@main.command()
@click.option("--nl", "n_l", type=click.IntRange(min=0), required=True)
@click.option("--nr", "n_r", type=click.IntRange(min=0), required=True)
@click.option("--no", "n_o", type=click.IntRange(min=0), required=True)
@click.option("--d-lr", type=click.FloatRange(0, 1), required=True)
@click.option("--d-cross", type=click.FloatRange(0, 1), default=0.0, show_default=True)
@click.option("--d-o", type=click.FloatRange(0, 1), default=0.0, show_default=True)
@click.option("--cv", type=click.FloatRange(min=0), default=0.0, show_default=True)
@click.option("--vary", type=click.Choice(VARY_CHOICES), required=True, help="Parameter to sweep.")
@click.option("--values", required=True, help="Comma-separated values for the varied parameter.")
@click.option("--seeds", required=True, help="Comma-separated PRNG seeds.")
@click.option("--algorithms", required=True, help="Comma-separated algorithm names.")
@click.option("--timeout", "timeout_s", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("-o", "--out", "out_file", type=click.Path(dir_okay=False), default=None, help="CSV output path (stdout if omitted).")
@server_option
def bench(n_l, n_r, n_o, d_lr, d_cross, d_o, cv, vary, values, seeds, algorithms, timeout_s, out_file, server) -> None:
    """Sweep one generator parameter and emit a CSV of runtimes."""
    try:
        value_list = [float(tok) for tok in values.split(",") if tok.strip()]
        seed_list = [int(tok) for tok in seeds.split(",") if tok.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad numeric list: {exc}")
    algorithm_list = [tok.strip() for tok in algorithms.split(",") if tok.strip()]
    if not algorithm_list:
        raise click.UsageError("empty algorithm list")
    for name in algorithm_list:
        if name not in ALGORITHM_CHOICES:
            raise click.UsageError(f"unknown algorithm {name!r}")
    payload = {
        "n_l": n_l,
        "n_r": n_r,
        "n_o": n_o,
        "d_lr": d_lr,
        "d_cross": d_cross,
        "d_o": d_o,
        "cv": cv,
        "vary": vary,
        "values": value_list,
        "seeds": seed_list,
        "algorithms": algorithm_list,
        "timeout_s": timeout_s,
    }
    resp = _call(server, "POST", "/bench", payload)
    _check(resp)
    if out_file:
        Path(out_file).write_text(resp.text, encoding="utf-8")
        click.echo(f"wrote {out_file}")
    else:
        click.echo(resp.text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
