"""HTTP service exposing the parameter calculus, tables, traces, and checks."""

import math

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from . import tables, verify
from .core import (
    beta_angle,
    certainty_phase,
    min_certainty_steps,
    optimal_iterations,
    p_max,
    refined_iterations,
)
from .errors import InfeasibleBudgetError
from .schemas import (
    CheckModel,
    ParamsResponse,
    TableOneRowModel,
    TableResponse,
    TableTwoRowModel,
    TracePoint,
    TraceRequest,
    TraceResponse,
    VerifyRequest,
    VerifyResponse,
)
from .simulate import run_trace

app = FastAPI(title="certain-grover", version="0.1.0")


@app.exception_handler(InfeasibleBudgetError)
async def infeasible_handler(request: Request, exc: InfeasibleBudgetError):
    return JSONResponse(
        status_code=409,
        content={
            "detail": {
                "message": str(exc),
                "min_feasible_j": exc.min_feasible_j,
            }
        },
    )


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}


@app.get("/params", response_model=ParamsResponse)
async def params(n: int = Query(ge=2)) -> ParamsResponse:
    j_min = min_certainty_steps(n)
    phi = certainty_phase(n, j_min)
    return ParamsResponse(
        n=n,
        beta=beta_angle(n),
        j_op=optimal_iterations(n),
        refined_j=refined_iterations(n),
        p_max=p_max(n),
        j_min=j_min,
        phi=phi,
        phi_over_pi=phi / math.pi,
    )


@app.get("/table/{which}", response_model=TableResponse)
async def table(which: int) -> TableResponse:
    if which == 1:
        rows = [
            TableOneRowModel(label=r.label, n=r.n, j_op=r.j_op, ratio=r.ratio)
            for r in tables.table_one()
        ]
    elif which == 2:
        rows = [
            TableTwoRowModel(
                label=r.label,
                n=r.n,
                steps=r.steps,
                phi=r.phi,
                phi_over_pi=r.phi_over_pi,
            )
            for r in tables.table_two()
        ]
    else:
        raise ValueError(f"table must be 1 or 2, got {which}")
    return TableResponse(which=which, rows=rows)


@app.post("/trace", response_model=TraceResponse)
async def trace(req: TraceRequest) -> TraceResponse:
    run = run_trace(
        n=req.n,
        tau=req.tau,
        j=req.j,
        phi=req.phi,
        formalism=req.formalism,
        steps=req.steps,
    )
    return TraceResponse(
        n=run.n,
        tau=run.tau,
        j=run.j,
        phi=run.phi,
        formalism=run.formalism,
        trace=[TracePoint(step=k, p=p) for k, p in run.entries],
        terminal=run.terminal,
    )


@app.post("/verify", response_model=VerifyResponse)
async def run_checks(req: VerifyRequest) -> VerifyResponse:
    seed = req.seed if req.seed is not None else verify.DEFAULT_SEED
    results = verify.run_verification(
        max_n=req.max_n,
        phi_perturb=req.phi_perturb,
        cases=req.cases,
        seed=seed,
    )
    checks = [CheckModel(name=r.name, passed=r.passed, detail=r.detail) for r in results]
    return VerifyResponse(checks=checks, all_passed=verify.all_passed(results))
