"""Stateless HTTP JSON API wrapping synthesis and sweeps.

POST /api/v1/design takes a DesignSpec body (same field names as the CLI's
JSON output) and returns the canonical DesignResult JSON with a trailing
``compute_ms`` timing field. GET /api/v1/health reports liveness.
"""

from __future__ import annotations

import os
import time

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from . import __version__
from .errors import InfeasibleDesign, InvalidSpec, MwfiltError, NonPhysical
from .network import DB_FLOOR, SweepGrid
from .result import design as run_design
from .result import result_json
from .spec import DesignSpec

MAX_GRID_POINTS = 1_000_000


def _spec_from_body(body: dict) -> tuple[DesignSpec, str, SweepGrid | None]:
    if not isinstance(body, dict):
        raise InvalidSpec("request body must be a JSON object")
    try:
        edges = tuple(float(x) for x in body["band_edges_ghz"])
    except (KeyError, TypeError, ValueError):
        raise InvalidSpec("band_edges_ghz must be an array of numbers")
    try:
        spec = DesignSpec(
            family=body.get("family", "chebyshev"),
            kind=body.get("kind", ""),
            insertion_loss_db=float(body.get("insertion_loss_db", 0.0)),
            return_loss_db=float(body.get("return_loss_db", 0.0)),
            band_edges_ghz=edges,
            z0_ohm=float(body.get("z0_ohm", 50.0)),
            topology=body.get("topology", "shunt_first"),
            order=int(body["order"]) if body.get("order") is not None else None,
        )
    except (TypeError, ValueError):
        raise InvalidSpec("spec fields must be numeric where numbers are expected")
    method = body.get("method", "both")
    grid = None
    if body.get("grid") is not None:
        g = body["grid"]
        try:
            grid = SweepGrid(float(g["start_ghz"]), float(g["stop_ghz"]), float(g["step_ghz"]))
        except (KeyError, TypeError, ValueError):
            raise InvalidSpec("grid must carry numeric start_ghz, stop_ghz, step_ghz")
        grid.validate()
        if grid.points > MAX_GRID_POINTS:
            raise InvalidSpec(f"grid must not exceed {MAX_GRID_POINTS} points")
    return spec, method, grid


def _error_response(code: str, message: str, status: int) -> JSONResponse:
    return JSONResponse({"code": code, "message": message, "constraint": message}, status_code=status)


def create_app() -> FastAPI:
    app = FastAPI(title="mwfilt", version=__version__)

    origin = os.environ.get("MWF_CORS_ORIGIN")
    if origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    db_floor = float(os.environ.get("MWF_DB_FLOOR", DB_FLOOR))

    @app.get("/api/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/v1/design")
    async def design_endpoint(request: Request):
        t0 = time.perf_counter()
        try:
            body = await request.json()
        except Exception:
            return _error_response("invalid_spec", "request body is not valid JSON", 400)
        try:
            spec, method, grid = _spec_from_body(body)
            result = run_design(spec, method=method, grid=grid, db_floor=db_floor)
        except (InvalidSpec, InfeasibleDesign, NonPhysical) as e:
            return _error_response(e.code, str(e), 400)
        except MwfiltError as e:
            return _error_response("internal", str(e), 500)

        canonical = result_json(result)  # ends with "}\n"
        ms = (time.perf_counter() - t0) * 1000.0
        body_text = canonical[:-2] + f',"compute_ms":{ms:.3f}}}\n'
        return Response(content=body_text, media_type="application/json")

    return app


app = create_app()
