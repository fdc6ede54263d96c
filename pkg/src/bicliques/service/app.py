"""FastAPI application wrapping the enumeration library.

The service is stateless compute over text payloads: clients own the
files, the server parses, runs, and answers. Wall time is measured
inside the engines around the enumeration work only; heuristic OCT
computation is timed separately.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException, Response

from .. import __version__
from ..algorithms import NEEDS_OCT, run_algorithm
from ..bench import SweepSpec, rows_to_csv, run_sweep
from ..decomposition import greedy_oct, parse_decomposition, serialize_decomposition, validate_oct
from ..generator import GeneratorParams, generate, realized_stats
from ..graph import GraphFormatError, load_graph, serialize_graph
from .models import (
    BenchRequest,
    EnumerateRequest,
    EnumerateResponse,
    GenerateRequest,
    GenerateResponse,
    RealizedStatsModel,
    ValidateOctRequest,
    ValidateOctResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="bicliques", version=__version__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/generate", response_model=GenerateResponse)
    def generate_endpoint(req: GenerateRequest) -> GenerateResponse:
        params = GeneratorParams(
            n_l=req.n_l,
            n_r=req.n_r,
            n_o=req.n_o,
            d_lr=req.d_lr,
            d_cross=req.d_cross,
            d_o=req.d_o,
            cv_lr=req.cv_lr,
            cv_cross=req.cv_cross,
            seed=req.seed,
        )
        try:
            g, d = generate(params)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        stats = realized_stats(g, d)
        return GenerateResponse(
            n=g.n,
            m=g.m,
            graph_text=serialize_graph(g),
            oct_text=serialize_decomposition(d),
            stats=RealizedStatsModel(
                d_lr=stats.d_lr,
                d_cross=stats.d_cross,
                d_o=stats.d_o,
                cv_lr=stats.cv_lr,
                cv_cross=stats.cv_cross,
            ),
        )

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
        try:
            g = load_graph(req.graph_text)
        except GraphFormatError as exc:
            raise HTTPException(status_code=400, detail=f"bad graph: {exc}")
        decomposition = None
        oct_time = None
        if req.algorithm in NEEDS_OCT:
            if req.oct_text is not None:
                try:
                    decomposition = parse_decomposition(req.oct_text, g.n)
                except ValueError as exc:
                    raise HTTPException(status_code=400, detail=f"bad decomposition: {exc}")
            elif req.oct_heuristic:
                t0 = time.perf_counter()
                decomposition = greedy_oct(g, rng_seed=req.oct_seed)
                oct_time = time.perf_counter() - t0
            else:
                raise HTTPException(
                    status_code=400,
                    detail=f"{req.algorithm} requires oct_text or oct_heuristic=true",
                )
        if req.list_bicliques and req.count_only:
            raise HTTPException(status_code=400, detail="list_bicliques excludes count_only")
        try:
            res = run_algorithm(
                req.algorithm,
                g,
                decomposition=decomposition,
                timeout=req.timeout_s,
                count_only=req.count_only,
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        listing = None
        if req.list_bicliques:
            listing = [
                f"{','.join(map(str, b.x))} | {','.join(map(str, b.y))}"
                for b in res.bicliques.sorted_bicliques()
            ]
        return EnumerateResponse(
            algorithm=res.algorithm,
            count=res.count,
            wall_time_s=res.wall_time,
            timed_out=res.timed_out,
            oct_time_s=oct_time,
            n_o=decomposition.n_o if decomposition is not None else None,
            bicliques=listing,
        )

    @app.post("/bench")
    def bench_endpoint(req: BenchRequest) -> Response:
        base = GeneratorParams(
            n_l=req.n_l,
            n_r=req.n_r,
            n_o=req.n_o,
            d_lr=req.d_lr,
            d_cross=req.d_cross,
            d_o=req.d_o,
            cv_lr=req.cv,
            cv_cross=req.cv,
            seed=0,
        )
        spec = SweepSpec(
            base=base,
            vary=req.vary,
            values=tuple(req.values),
            seeds=tuple(req.seeds),
            algorithms=tuple(req.algorithms),
            timeout=req.timeout_s,
        )
        try:
            rows = run_sweep(spec)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return Response(content=rows_to_csv(rows), media_type="text/csv; charset=utf-8")

    @app.post("/validate-oct", response_model=ValidateOctResponse)
    def validate_endpoint(req: ValidateOctRequest) -> ValidateOctResponse:
        try:
            g = load_graph(req.graph_text)
            d = parse_decomposition(req.oct_text, g.n)
            ok, violations = validate_oct(g, d)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return ValidateOctResponse(valid=ok, violations=violations)

    return app
