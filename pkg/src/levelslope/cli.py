"""Command-line client for the drawing service.

Commands talk to the HTTP API: by default against an in-process instance of
the app, or against a running server via ``--server``.  Exit codes: 0 for
success or feasible, 1 for infeasible (the certificate is printed), 2 for
invalid input.
"""

from __future__ import annotations

import sys

import click
import httpx

EXIT_INFEASIBLE = 1
EXIT_INVALID = 2


class ServiceClient:
    def __init__(self, base_url: str | None = None):
        if base_url:
            self._client = httpx.Client(base_url=base_url)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        try:
            response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            failure = click.ClickException(f"cannot reach the service: {exc}")
            failure.exit_code = EXIT_INVALID
            raise failure from exc
        return response.status_code, response.json()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _bail_invalid(ctx: click.Context, detail: object) -> None:
    click.echo(f"error: {detail}", err=True)
    ctx.exit(EXIT_INVALID)


def _format_infeasible(body: dict) -> str:
    lines = ["infeasible"]
    witness = body.get("witness")
    if witness:
        for e in witness["edges"]:
            lines.append(f"cycle {e['tail']} {e['head']} {e['length']} {e['kind']}")
        lines.append(f"total {witness['total']}")
    elif body.get("reason"):
        lines.append(f"reason {body['reason']}")
    return "\n".join(lines) + "\n"


@click.group()
@click.option("--server", default=None, metavar="URL", help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Slope-bounded level-planar drawings: validate, draw, extend, compare."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.argument("infile")
@click.option("--allow-long-edges", is_flag=True, help="Accept edges spanning several levels.")
@click.pass_context
def validate(ctx: click.Context, infile: str, allow_long_edges: bool) -> None:
    """Check an instance document; exit 0 when it is valid."""
    status, body = ctx.obj.post(
        "/validate", {"document": _read(infile), "require_proper": not allow_long_edges}
    )
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    if body["ok"]:
        click.echo("ok")
        return
    for violation in body["violations"]:
        items = " ".join(violation["items"])
        click.echo(f"{violation['code']}: {violation['message']}" + (f" [{items}]" if items else ""))
    ctx.exit(EXIT_INVALID)


@main.command()
@click.argument("infile")
@click.option("--slopes", type=int, required=True, help="Number of allowed slopes (0..slopes-1).")
@click.option("-o", "--output", default=None, help="Write coordinates to a file instead of stdout.")
@click.option("--svg", "svg_file", default=None, help="Also write an SVG rendering to this file.")
@click.option("--grid", is_flag=True, help="Draw one horizontal grid line per level in the SVG.")
@click.pass_context
def draw(ctx: click.Context, infile: str, slopes: int, output: str | None, svg_file: str | None, grid: bool) -> None:
    """Compute the rightmost drawing of a graph document."""
    status, body = ctx.obj.post(
        "/draw", {"document": _read(infile), "slopes": slopes, "svg": svg_file is not None, "grid": grid}
    )
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    if not body["feasible"]:
        click.echo(_format_infeasible(body), nl=False)
        ctx.exit(EXIT_INFEASIBLE)
    _write(output, body["coordinates"])
    if svg_file is not None:
        _write(svg_file, body["svg"])


@main.command()
@click.argument("infile")
@click.option("--slopes", type=int, required=True)
@click.option("-o", "--output", default=None)
@click.pass_context
def extend(ctx: click.Context, infile: str, slopes: int, output: str | None) -> None:
    """Extend the pinned partial drawing of a document to the whole graph."""
    status, body = ctx.obj.post("/extend", {"document": _read(infile), "slopes": slopes})
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    if not body["feasible"]:
        click.echo(_format_infeasible(body), nl=False)
        ctx.exit(EXIT_INFEASIBLE)
    _write(output, body["coordinates"])


@main.command()
@click.argument("infile")
@click.option("--slopes", type=int, required=True)
@click.option("-o", "--output", default=None)
@click.pass_context
def simultaneous(ctx: click.Context, infile: str, slopes: int, output: str | None) -> None:
    """Draw two graphs so that they agree on their shared subgraph."""
    status, body = ctx.obj.post("/simultaneous", {"document": _read(infile), "slopes": slopes})
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    if not body["feasible"]:
        click.echo(_format_infeasible(body), nl=False)
        ctx.exit(EXIT_INFEASIBLE)
    text = f"graph 1\n{body['first']}graph 2\n{body['second']}iterations {body['iterations']}\n"
    _write(output, text)


@main.command()
@click.argument("infile")
@click.option("--slopes", type=int, required=True)
@click.option("--max-n", type=int, default=None, help="Override the exhaustive search size guard.")
@click.pass_context
def enumerate(ctx: click.Context, infile: str, slopes: int, max_n: int | None) -> None:
    """List every compact drawing of a small graph document."""
    status, body = ctx.obj.post(
        "/enumerate", {"document": _read(infile), "slopes": slopes, "max_vertices": max_n}
    )
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    click.echo(f"count {body['count']}")
    click.echo(f"bound {body['search_bound']}")
    for text in body["drawings"]:
        click.echo(text, nl=False)


@main.command("dump-flow")
@click.argument("infile")
@click.option("--slopes", type=int, required=True)
@click.pass_context
def dump_flow(ctx: click.Context, infile: str, slopes: int) -> None:
    """Print the flow network of the boundary-augmented graph."""
    status, body = ctx.obj.post("/dump/flow", {"document": _read(infile), "slopes": slopes})
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    click.echo(body["dump"], nl=False)


@main.command("dump-distance")
@click.argument("infile")
@click.option("--slopes", type=int, required=True)
@click.pass_context
def dump_distance(ctx: click.Context, infile: str, slopes: int) -> None:
    """Print the distance graph of the boundary-augmented graph."""
    status, body = ctx.obj.post("/dump/distance", {"document": _read(infile), "slopes": slopes})
    if status != 200:
        _bail_invalid(ctx, body.get("detail", body))
    click.echo(body["dump"], nl=False)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
