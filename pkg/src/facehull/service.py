"""HTTP service exposing the exact-computation core.

Endpoints mirror the CLI subcommands one-to-one.  The CLI is a thin client
over the same handler functions (``compute_*`` / ``run_verification``), so
both surfaces produce identical payloads; the handlers raise plain
ValueError/ParseError/CapExceeded and the endpoint wrappers translate those
into HTTP errors.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .formats import ParseError, graph_from_json_dict, load_graph_text
from .graphs import Graph, clique_vector
from .hull import membership_coefficients, membership_inequalities
from .turan import TuranSpec, turan_clique_vector, turan_graph
from .vectors import IntVector
from .verify import (
    CapExceeded,
    VerificationReport,
    check_section5_chain,
    check_theorem_1_1,
    check_theorem_3_1,
    check_zykov,
)


class TuranRequest(BaseModel):
    n: int = Field(ge=1, le=64)
    r: int = Field(ge=1)
    include_graph: bool = False


class TuranResponse(BaseModel):
    n: int
    r: int
    parts: list[int]
    vector: list[int]
    edges: Optional[list[list[int]]] = None


class GraphPayload(BaseModel):
    """A graph in any supported wire form: graph6, raw text, or n + edges."""

    graph6: Optional[str] = None
    text: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=0, le=64)
    edges: Optional[list[list[int]]] = None
    format: Literal["auto", "graph6", "edgelist", "json"] = "auto"

    @model_validator(mode="after")
    def _exactly_one_form(self) -> "GraphPayload":
        forms = sum([self.graph6 is not None, self.text is not None, self.n is not None])
        if forms != 1:
            raise ValueError("provide exactly one of: graph6, text, or n (+ edges)")
        if self.edges is not None and self.n is None:
            raise ValueError("edges require n")
        return self

    def to_graph(self) -> Graph:
        if self.graph6 is not None:
            return load_graph_text(self.graph6, "graph6")
        if self.text is not None:
            return load_graph_text(self.text, self.format)
        return graph_from_json_dict({"n": self.n, "edges": self.edges or []})


class CliquesResponse(BaseModel):
    order: int
    vector: list[int]
    clique_number: int


class HullCheckRequest(BaseModel):
    """Membership query: test f against an explicit g or against t(n,r)."""

    f: list[int]
    g: Optional[list[int]] = None
    n: Optional[int] = Field(default=None, ge=1, le=64)
    r: Optional[int] = Field(default=None, ge=1)
    method: Literal["both", "inequalities", "coefficients"] = "both"

    @model_validator(mode="after")
    def _generator_given(self) -> "HullCheckRequest":
        if self.g is None and (self.n is None or self.r is None):
            raise ValueError("provide either g or both n and r")
        if self.g is not None and (self.n is not None or self.r is not None):
            raise ValueError("provide g or (n, r), not both")
        return self


class HullCheckResponse(BaseModel):
    verdict: str
    agreement: bool
    generator: list[int]
    certificates: list[dict]


class VerifyRequest(BaseModel):
    theorem: Literal["thm11", "thm31", "zykov", "section5"]
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    k: Optional[int] = None
    samples: int = Field(default=200, ge=1)
    seed: int = 0
    long_run: bool = False
    workers: int = Field(default=1, ge=1)


# ---------------------------------------------------------------------------
# handlers (shared by the HTTP endpoints and the CLI)

def compute_turan(req: TuranRequest) -> TuranResponse:
    spec = TuranSpec.of(req.n, req.r)
    vec = turan_clique_vector(req.n, req.r)
    edges = None
    if req.include_graph:
        edges = [[u, v] for u, v in turan_graph(req.n, req.r).edges()]
    return TuranResponse(
        n=req.n, r=req.r, parts=list(spec.parts), vector=vec.to_list(), edges=edges
    )


def compute_cliques(payload: GraphPayload) -> CliquesResponse:
    g = payload.to_graph()
    c = clique_vector(g)
    return CliquesResponse(order=g.n, vector=c.to_list(), clique_number=c.support())


def compute_hull_check(req: HullCheckRequest) -> HullCheckResponse:
    f = IntVector(req.f)
    if req.g is not None:
        g = IntVector(req.g)
    else:
        g = turan_clique_vector(req.n, req.r)
    certs = []
    if req.method in ("both", "inequalities"):
        certs.append(membership_inequalities(f, g))
    if req.method in ("both", "coefficients"):
        certs.append(membership_coefficients(f, g))
    verdicts = {c.verdict for c in certs}
    if len(verdicts) != 1:
        raise RuntimeError("membership oracles disagree; this is a bug")
    return HullCheckResponse(
        verdict=certs[0].verdict,
        agreement=True,
        generator=g.to_list(),
        certificates=[c.to_json_dict() for c in certs],
    )


def run_verification(req: VerifyRequest, progress=None) -> VerificationReport:
    if req.theorem == "thm31":
        return check_theorem_3_1(req.n, req.r, req.long_run, req.workers, progress=progress)
    if req.theorem == "zykov":
        return check_zykov(req.n, req.r, req.long_run, req.workers, progress=progress)
    if req.theorem == "thm11":
        return check_theorem_1_1(req.n, req.r, req.long_run, req.workers, progress=progress)
    k = req.k if req.k is not None else 2
    return check_section5_chain(req.samples, req.n, req.r, k, req.seed)


# ---------------------------------------------------------------------------
# FastAPI wiring

app = FastAPI(
    title="facehull",
    version=__version__,
    description="Exact clique/face-vector computations and hull-membership certificates",
)


def _http(exc: Exception) -> HTTPException:
    if isinstance(exc, ParseError):
        return HTTPException(status_code=400, detail=str(exc))
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/turan", response_model=TuranResponse)
def turan_endpoint(req: TuranRequest) -> TuranResponse:
    try:
        return compute_turan(req)
    except ValueError as exc:
        raise _http(exc) from exc


@app.post("/cliques", response_model=CliquesResponse)
def cliques_endpoint(payload: GraphPayload) -> CliquesResponse:
    try:
        return compute_cliques(payload)
    except ValueError as exc:
        raise _http(exc) from exc


@app.post("/hull/check", response_model=HullCheckResponse)
def hull_check_endpoint(req: HullCheckRequest) -> HullCheckResponse:
    try:
        return compute_hull_check(req)
    except ValueError as exc:
        raise _http(exc) from exc


@app.post("/verify")
def verify_endpoint(req: VerifyRequest) -> dict:
    try:
        report = run_verification(req)
    except CapExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except ValueError as exc:
        raise _http(exc) from exc
    return report.to_json_dict(include_timing=True)
