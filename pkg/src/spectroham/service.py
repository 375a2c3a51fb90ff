"""HTTP wrapper around the checkers: graph6 in, JSON verdicts out.

Single-graph endpoints mirror the library API one to one; /verify and
/sample run bounded bulk verifications inline (exhaustive enumeration
is capped at n = 6 here; use the command line for larger sweeps).
"""

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .graph6 import Graph6Error, parse_graph6
from .harness import (
    ENUMERATION,
    SAMPLE,
    HarnessError,
    VerificationRun,
    evaluate_graph,
    extremal_report,
    parse_theorem_list,
    row_to_obj,
    verdict_to_obj,
    verify,
)
from .invariants import invariants
from .spectra import adjacency_matrix, laplacian_matrix, spectral_summary, symmetric_eigenvalues
from .theorems import THEOREM_IDS, VALID_S, TheoremQuery, evaluate_query
from .hamilton import hamiltonian_profile

app = FastAPI(
    title="spectroham",
    version=__version__,
    description="Spectral sufficient conditions for Hamiltonian properties",
)


class GraphRequest(BaseModel):
    graph6: str
    eps: Optional[float] = Field(None, ge=0)


class CheckRequest(GraphRequest):
    theorems: Optional[str] = None


class TheoremRequest(GraphRequest):
    theorem_id: str
    s: Optional[int] = None
    k: Optional[int] = None


class ExtremalRequest(BaseModel):
    k: int = Field(..., ge=1, le=6)
    s: int = Field(..., ge=-1, le=1)
    eps: Optional[float] = Field(None, ge=0)


class VerifyRequest(BaseModel):
    n_min: int = Field(1, ge=1, le=6)
    n_max: int = Field(..., ge=1, le=6)
    min_kappa: int = Field(0, ge=0)
    theorems: Optional[str] = None
    eps: Optional[float] = Field(None, ge=0)


class SampleRequest(BaseModel):
    n: int = Field(..., ge=1, le=62)
    count: int = Field(100, ge=1, le=5000)
    seed: int = 0
    min_kappa: int = Field(0, ge=0)
    theorems: Optional[str] = None
    eps: Optional[float] = Field(None, ge=0)


class ProfileOut(BaseModel):
    traceable: bool
    hamiltonian: bool
    homogeneously_traceable: bool
    hamiltonian_connected: bool


class VerdictOut(BaseModel):
    theorem_id: str
    s: Optional[int]
    k: Optional[int]
    property: Optional[str]
    hypothesis: str
    bound_value: Optional[float]
    observed_value: Optional[float]
    excluded_extremal: bool
    applicability: bool
    predicted: Optional[bool]
    oracle_truth: Optional[bool]
    consistent: bool


class RowOut(BaseModel):
    graph6: str
    n: int
    delta: int
    kappa: int
    alpha: int
    lambda1: float
    lambda_n: float
    mu1: float
    profile: ProfileOut
    verdicts: List[VerdictOut]


class CheckOut(RowOut):
    consistent: bool


class SpectrumOut(BaseModel):
    n: int
    lambda1: float
    lambda_n: float
    mu1: float
    tolerance: float
    adjacency_spectrum: List[float]
    laplacian_spectrum: List[float]


class InvariantsOut(BaseModel):
    n: int
    min_degree: int
    connectivity: int
    independence_number: int
    is_connected: bool


class TheoremInfo(BaseModel):
    theorem_id: str
    s_values: List[Optional[int]]


class CounterexampleOut(BaseModel):
    graph6: str
    theorem_id: str
    s: Optional[int]
    verdict: VerdictOut


class RunOut(BaseModel):
    source: str
    scanned: int
    applicable: int
    predicted: int
    boundary: int
    inconsistent: int
    counterexamples: List[CounterexampleOut]


class HealthOut(BaseModel):
    status: str
    version: str


def _graph(text):
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _queries(text):
    try:
        return parse_theorem_list(text)
    except (HarnessError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _run_out(run):
    return RunOut(
        source=run.source,
        scanned=run.scanned,
        applicable=run.applicable,
        predicted=run.predicted,
        boundary=run.boundary,
        inconsistent=run.inconsistent,
        counterexamples=[
            CounterexampleOut(
                graph6=cx.graph6, theorem_id=cx.theorem_id, s=cx.s,
                verdict=VerdictOut(**verdict_to_obj(cx.verdict)))
            for cx in run.counterexamples
        ],
    )


@app.get("/health", response_model=HealthOut)
def health():
    return HealthOut(status="ok", version=__version__)


@app.get("/theorems", response_model=List[TheoremInfo])
def list_theorems():
    return [TheoremInfo(theorem_id=tid, s_values=list(VALID_S[tid])) for tid in THEOREM_IDS]


@app.post("/check", response_model=CheckOut)
def check(req: CheckRequest):
    g = _graph(req.graph6)
    row = evaluate_graph(g, _queries(req.theorems), eps=req.eps)
    obj = row_to_obj(row)
    obj["consistent"] = all(v.consistent for v in row.verdicts)
    return CheckOut(**obj)


@app.post("/spectrum", response_model=SpectrumOut)
def spectrum(req: GraphRequest):
    g = _graph(req.graph6)
    summary = spectral_summary(g)
    return SpectrumOut(
        n=g.n,
        lambda1=summary.lambda1,
        lambda_n=summary.lambda_n,
        mu1=summary.mu1,
        tolerance=summary.tolerance,
        adjacency_spectrum=symmetric_eigenvalues(adjacency_matrix(g)),
        laplacian_spectrum=symmetric_eigenvalues(laplacian_matrix(g)),
    )


@app.post("/invariants", response_model=InvariantsOut)
def graph_invariants(req: GraphRequest):
    g = _graph(req.graph6)
    inv = invariants(g)
    return InvariantsOut(
        n=inv.n,
        min_degree=inv.min_degree,
        connectivity=inv.connectivity,
        independence_number=inv.independence_number,
        is_connected=inv.is_connected,
    )


@app.post("/profile", response_model=ProfileOut)
def profile(req: GraphRequest):
    g = _graph(req.graph6)
    prof = hamiltonian_profile(g)
    return ProfileOut(
        traceable=prof.traceable,
        hamiltonian=prof.hamiltonian,
        homogeneously_traceable=prof.homogeneously_traceable,
        hamiltonian_connected=prof.hamiltonian_connected,
    )


@app.post("/theorem", response_model=VerdictOut)
def theorem(req: TheoremRequest):
    g = _graph(req.graph6)
    try:
        query = TheoremQuery(req.theorem_id, req.s, req.k)
        verdict = evaluate_query(g, query, eps=req.eps)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return VerdictOut(**verdict_to_obj(verdict))


@app.post("/extremal", response_model=RowOut)
def extremal(req: ExtremalRequest):
    if req.s not in (1, 0, -1):
        raise HTTPException(status_code=400, detail="s must be 1, 0, or -1")
    try:
        row = extremal_report(req.k, req.s, eps=req.eps)
    except HarnessError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    return RowOut(**row_to_obj(row))


@app.post("/verify", response_model=RunOut)
def run_verify(req: VerifyRequest):
    run = VerificationRun(
        source=ENUMERATION,
        n_min=req.n_min,
        n_max=req.n_max,
        min_kappa=req.min_kappa,
        theorems=_queries(req.theorems),
        eps=req.eps,
    )
    return _run_out(verify(run))


@app.post("/sample", response_model=RunOut)
def run_sample(req: SampleRequest):
    run = VerificationRun(
        source=SAMPLE,
        sample_n=req.n,
        sample_count=req.count,
        sample_seed=req.seed,
        min_kappa=req.min_kappa,
        theorems=_queries(req.theorems),
        eps=req.eps,
    )
    return _run_out(verify(run))
