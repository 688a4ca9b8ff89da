"""HTTP face of the workbench.

Run with: uvicorn clab.service.app:app
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers
from .schemas import (ArithmeticRequest, ChiFRequest, DotRequest,
                      EncodeRequest, GadgetRequest, LemmaRequest, Report,
                      SolveRequest, TheoremRequest, WitnessRequest)

app = FastAPI(title="clab", version="0.1.0",
              description="Exact multiple list colouring workbench")


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/gadget", response_model=Report)
def gadget(req: GadgetRequest) -> Report:
    return handlers.handle_gadget(req)


@app.post("/solve", response_model=Report)
def solve(req: SolveRequest) -> Report:
    return handlers.handle_solve(req)


@app.post("/encode", response_model=Report)
def encode(req: EncodeRequest) -> Report:
    return handlers.handle_encode(req)


@app.post("/verify/lemma", response_model=Report)
def verify_lemma(req: LemmaRequest) -> Report:
    return handlers.handle_verify_lemma(req)


@app.post("/verify/theorem", response_model=Report)
def verify_theorem(req: TheoremRequest) -> Report:
    return handlers.handle_verify_theorem(req)


@app.post("/verify/arithmetic", response_model=Report)
def verify_arithmetic(req: ArithmeticRequest) -> Report:
    return handlers.handle_verify_arithmetic(req)


@app.post("/witness", response_model=Report)
def witness(req: WitnessRequest) -> Report:
    return handlers.handle_witness(req)


@app.post("/chif", response_model=Report)
def chif(req: ChiFRequest) -> Report:
    return handlers.handle_chif(req)


@app.post("/export-dot", response_model=Report)
def export_dot(req: DotRequest) -> Report:
    return handlers.handle_export_dot(req)
