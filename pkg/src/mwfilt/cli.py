"""Command-line front end: parse a design spec, run synthesis and both sweep
routes, emit element values and responses as JSON or CSV."""

from __future__ import annotations

import os
import sys

import click

from .errors import InfeasibleDesign, InvalidSpec, MwfiltError, NonPhysical
from .network import DB_FLOOR, SweepGrid
from .result import design as run_design
from .result import response_csv, result_json
from .spec import DesignSpec
from .synthesis import ripple_chain

KIND_ALIASES = {
    "lp": "lowpass",
    "hp": "highpass",
    "bp": "bandpass",
    "bs": "bandstop",
    "coupled": "coupled_bandpass",
    "uwb": "uwb_bandpass",
}


def _fail(code: str, message: str, exit_code: int = 2):
    click.echo(f'{{"error":"{code}","message":{_json_str(message)}}}', err=True)
    sys.exit(exit_code)


def _json_str(s: str) -> str:
    import json

    return json.dumps(s)


def _db_floor() -> float:
    raw = os.environ.get("MWF_DB_FLOOR")
    if raw is None:
        return DB_FLOOR
    try:
        return float(raw)
    except ValueError:
        _fail("invalid_spec", "MWF_DB_FLOOR must be a number")


def _build_spec(kind, family, la, lr, fp, fs, f1, f2, fs1, fs2, f0, bw, bws, order, z0, topology):
    kind = KIND_ALIASES.get(kind, kind)

    def need(name, value):
        if value is None:
            raise InvalidSpec(f"--{name} is required for kind {kind!r}")
        return value

    if kind == "lowpass":
        edges = (need("fp", fp), need("fs", fs))
    elif kind == "highpass":
        edges = (need("fs", fs), need("fp", fp))
    elif kind == "bandpass":
        edges = (need("f1", f1), need("f2", f2), need("fs", fs))
    elif kind == "bandstop":
        edges = (need("f1", f1), need("f2", f2), need("fs1", fs1), need("fs2", fs2))
    elif kind == "coupled_bandpass":
        edges = (need("f0", f0), need("bw", bw), need("bws", bws))
    elif kind == "combline":
        edges = (need("f0", f0), need("bw", bw))
        need("order", order)
    elif kind == "uwb_bandpass":
        edges = (need("f1", f1), need("f2", f2))
    else:
        raise InvalidSpec(f"unknown kind {kind!r}")

    la_value = la if la is not None else 0.0
    if lr is None:
        raise InvalidSpec("--lr is required")
    return DesignSpec(
        family=family,
        kind=kind,
        insertion_loss_db=la_value,
        return_loss_db=lr,
        band_edges_ghz=edges,
        z0_ohm=z0,
        topology=topology,
        order=order,
    )


@click.group()
def main():
    """Microwave filter synthesis and analysis."""


@main.command("design")
@click.option("--family", default="chebyshev", type=click.Choice(["butterworth", "chebyshev"]))
@click.option("--kind", required=True)
@click.option("--la", type=float, default=None, help="Insertion loss target, dB")
@click.option("--lr", type=float, default=None, help="Return loss, dB")
@click.option("--fp", type=float, default=None)
@click.option("--fs", type=float, default=None)
@click.option("--f1", type=float, default=None)
@click.option("--f2", type=float, default=None)
@click.option("--fs1", type=float, default=None)
@click.option("--fs2", type=float, default=None)
@click.option("--f0", type=float, default=None)
@click.option("--bw", type=float, default=None)
@click.option("--bws", type=float, default=None)
@click.option("--order", type=int, default=None, help="Explicit order (combline only)")
@click.option("--z0", type=float, default=50.0)
@click.option("--topology", default="shunt_first", type=click.Choice(["shunt_first", "series_first"]))
@click.option("--method", default="both", type=click.Choice(["emulate", "simulate", "both"]))
@click.option("--grid", "grid_str", default=None, help="start,stop,step in GHz")
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "csv"]))
@click.option("--out", "out_path", default=None, help="Output path (default stdout)")
def cmd_design(family, kind, la, lr, fp, fs, f1, f2, fs1, fs2, f0, bw, bws, order, z0,
               topology, method, grid_str, fmt, out_path):
    """Synthesize a filter and sweep its response."""
    try:
        spec = _build_spec(kind, family, la, lr, fp, fs, f1, f2, fs1, fs2, f0, bw, bws,
                           order, z0, topology)
        grid = None
        if grid_str is not None:
            parts = grid_str.split(",")
            if len(parts) != 3:
                raise InvalidSpec("--grid must be start,stop,step")
            grid = SweepGrid(float(parts[0]), float(parts[1]), float(parts[2]))
        result = run_design(spec, method=method, grid=grid, db_floor=_db_floor())
        text = result_json(result) if fmt == "json" else response_csv(result)
    except (InvalidSpec, InfeasibleDesign, NonPhysical) as e:
        _fail(e.code, str(e))
    except MwfiltError as e:
        _fail(e.code, str(e), exit_code=1)

    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("table1")
@click.option("--format", "fmt", default="csv", type=click.Choice(["json", "csv"]))
def cmd_table1(fmt):
    """Reflection coefficient, passband ripple and ripple factor for
    return losses of 1..20 dB, to 4 decimals."""
    rows = []
    for lr in range(1, 21):
        ch = ripple_chain(float(lr))
        rows.append((lr, ch.reflection_coefficient, ch.passband_ripple_db, ch.ripple_factor))
    if fmt == "csv":
        lines = ["return_loss_db,reflection_coefficient,passband_ripple_db,ripple_factor"]
        lines += [f"{lr},{g:.4f},{lar:.4f},{eps:.4f}" for lr, g, lar, eps in rows]
        click.echo("\n".join(lines))
    else:
        items = ",".join(
            f'{{"return_loss_db":{lr},"reflection_coefficient":{g:.4f},'
            f'"passband_ripple_db":{lar:.4f},"ripple_factor":{eps:.4f}}}'
            for lr, g, lar, eps in rows
        )
        click.echo(f"[{items}]")


@main.command("serve")
@click.option("--port", type=int, default=None)
@click.option("--host", default="127.0.0.1")
def cmd_serve(port, host):
    """Run the HTTP JSON API."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("MWF_PORT", "8080"))
    try:
        uvicorn.run(create_app(), host=host, port=port, log_level="warning")
    except (OSError, SystemExit) as e:
        if isinstance(e, SystemExit) and not e.code:
            return
        _fail("internal", f"failed to bind port {port}: {e}")


if __name__ == "__main__":
    main()
