"""HTTP endpoints wrapping the core package one-to-one."""

import math

from fastapi import APIRouter, HTTPException
from fastapi.responses import PlainTextResponse

from .. import abacus, bratteli, characters, simulate, verify, walks
from ..partitions import as_partition
from . import schemas

router = APIRouter()


def _bad_request(exc: ValueError) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@router.post("/decompose", response_model=schemas.DecompositionResponse)
def decompose(req: schemas.DecomposeRequest):
    try:
        decomp = (
            bratteli.ajr_decomposition(req.n, req.j, req.r)
            if req.r != 1
            else characters.aj_decomposition(req.n, req.j)
        )
    except ValueError as exc:
        raise _bad_request(exc)
    return characters.decomposition_to_dict(decomp)


@router.post("/multiplicity", response_model=schemas.MultiplicityResponse)
def multiplicity(req: schemas.MultiplicityRequest):
    try:
        lam = as_partition(req.partition)
        if req.ambient_n is not None:
            n = req.ambient_n
            lam = as_partition((n - sum(lam),) + lam)
        elif req.n is not None:
            n = req.n
            if sum(lam) != n:
                raise ValueError(f"partition must sum to n={n}")
        else:
            raise ValueError("one of n or ambient_n is required")
        closed = bratteli.closed_form_multiplicity(lam, req.r, req.j, n)
        paths = bratteli.tensor_power(n, req.j, req.r).coefficient(lam)
    except ValueError as exc:
        raise _bad_request(exc)
    return {
        "n": n,
        "j": req.j,
        "r": req.r,
        "partition": list(lam),
        "closed_form": closed,
        "path_count": paths,
        "agree": closed == paths,
    }


@router.post("/abacus", response_model=schemas.AbacusResponse)
def abacus_info(req: schemas.AbacusRequest):
    try:
        return abacus.abacus_report(as_partition(req.partition), req.j)
    except ValueError as exc:
        raise _bad_request(exc)


@router.post("/moments", response_model=schemas.MomentsResponse)
def moments(req: schemas.MomentsRequest):
    try:
        spec = walks.WalkSpec(req.walk, req.n, req.k, i=req.i)
        report = walks.moment_report(spec, req.j, req.r, c=req.c, schedule=req.schedule)
    except ValueError as exc:
        raise _bad_request(exc)
    return {
        "walk": spec.kind,
        "n": spec.n,
        "k": spec.k,
        "i": spec.i,
        "j": req.j,
        "r": req.r,
        "exact_moment": str(report.exact_moment),
        "limit_moment": report.limit_moment,
        "poisson_reference": report.poisson_reference,
    }


@router.post("/limits", response_model=schemas.LimitsResponse)
def limits(req: schemas.LimitsRequest):
    try:
        limit = walks.limiting_jcycle_moment(req.j, req.r, req.c)
    except ValueError as exc:
        raise _bad_request(exc)
    rate = (1.0 - math.exp(-req.j * req.c)) / req.j
    return {
        "j": req.j,
        "r": req.r,
        "c": req.c,
        "limit_moment": limit,
        "poisson_rate": rate,
        "poisson_moment": walks.poisson_moment(rate, req.r),
    }


@router.post("/simulate", response_model=schemas.SimulateResponse)
def simulate_walk(req: schemas.SimulateRequest):
    try:
        i = req.i if req.walk == walks.ICYCLE else None
        k = req.k if req.k is not None else walks.schedule_steps(req.walk, req.schedule, req.n, req.c, i)
        spec = walks.WalkSpec(req.walk, req.n, k, i=i)
        config = simulate.SimConfig(
            spec=spec,
            trials=req.trials,
            seed=req.seed,
            tracked_js=tuple(req.js),
            c=req.c,
            schedule=req.schedule,
        )
    except ValueError as exc:
        raise _bad_request(exc)
    summary = simulate.run(config, threads=req.threads)
    return simulate.summary_to_dict(summary)


@router.get("/verify", response_model=schemas.VerifyResponse)
def verify_suite(fast: bool = True):
    results = verify.run_all(fast=fast)
    return {
        "ok": all(r.ok for r in results),
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
    }


@router.post("/diagram", response_class=PlainTextResponse)
def diagram(req: schemas.DiagramRequest):
    try:
        return bratteli.dot_export(req.n, req.j, req.levels)
    except ValueError as exc:
        raise _bad_request(exc)
