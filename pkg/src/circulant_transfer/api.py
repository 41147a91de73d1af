"""HTTP face of the toolkit: one endpoint per CLI subcommand."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, service
from .schemas import (
    CensusRequest,
    CensusResponse,
    CheckRequest,
    CheckResponse,
    ExportRequest,
    ExportResponse,
    InspectResponse,
    SpecSource,
    SpectrumRequest,
    SpectrumResponse,
)

app = FastAPI(
    title="circulant-transfer",
    version=__version__,
    description=(
        "Integral oriented circulant graphs: construction, exact spectra, "
        "state-transfer certificates, and census counts."
    ),
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/inspect", response_model=InspectResponse)
def inspect(req: SpecSource) -> InspectResponse:
    try:
        return service.inspect_spec(req)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum(req: SpectrumRequest) -> SpectrumResponse:
    try:
        return service.spectrum_report(req, verify=req.verify)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except service.VerifyMismatchError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    try:
        return service.check_transfer(req, mode=req.mode, tolerance=req.tolerance)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/census", response_model=CensusResponse)
def census(req: CensusRequest) -> CensusResponse:
    try:
        return service.run_census(req.n, req.kind, req.cap)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/export", response_model=ExportResponse)
def export(req: ExportRequest) -> ExportResponse:
    try:
        return service.export_graph(req, fmt=req.format)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
