"""HTTP facade over the solver: instance documents in, drawings out.

Every endpoint is a pure function of its request body.  Infeasibility is a
regular 200 response with ``feasible: false`` and the certificate attached;
malformed documents and instances come back as 400 with a diagnostic.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .distance import Infeasible, build_distance_graph, dump_distance_graph, rightmost_drawing
from .documents import emit_drawing, parse_instance
from .extend import (
    MalformedInstance,
    PartialInstance,
    SimultaneousInstance,
    extend_partial,
    simultaneous,
)
from .flow import build_flow_network, dump_flow_network
from .graphs import LevelGraph, add_boundaries, validate
from .oracle import SizeGuardExceeded, enumerate_drawings
from .svg import render_svg


class ValidateRequest(BaseModel):
    document: str
    require_proper: bool = True


class ViolationModel(BaseModel):
    code: str
    message: str
    items: list[str] = []


class ValidateResponse(BaseModel):
    ok: bool
    violations: list[ViolationModel] = []


class WitnessEdgeModel(BaseModel):
    tail: str
    head: str
    length: int
    kind: str


class WitnessModel(BaseModel):
    edges: list[WitnessEdgeModel]
    total: int


class DrawRequest(BaseModel):
    document: str
    slopes: int = Field(ge=1)
    svg: bool = False
    grid: bool = False


class DrawResponse(BaseModel):
    feasible: bool
    coordinates: str | None = None
    svg: str | None = None
    witness: WitnessModel | None = None
    reason: str | None = None


class SimultaneousResponse(BaseModel):
    feasible: bool
    first: str | None = None
    second: str | None = None
    iterations: int | None = None
    witness: WitnessModel | None = None
    reason: str | None = None


class EnumerateRequest(BaseModel):
    document: str
    slopes: int = Field(ge=1)
    max_vertices: int | None = None


class EnumerateResponse(BaseModel):
    count: int
    search_bound: int
    drawings: list[str]


class DumpRequest(BaseModel):
    document: str
    slopes: int = Field(ge=1)


class DumpResponse(BaseModel):
    dump: str


class RenderRequest(BaseModel):
    document: str
    slopes: int = Field(ge=1)
    unit: int = 40
    radius: int = 5
    grid: bool = False
    labels: bool = True


class RenderResponse(BaseModel):
    svg: str


app = FastAPI(title="levelslope", version=__version__)


def _parse(document: str) -> LevelGraph | PartialInstance | SimultaneousInstance:
    try:
        return parse_instance(document)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _expect_graph(document: str) -> LevelGraph:
    obj = _parse(document)
    if isinstance(obj, PartialInstance):
        return obj.g
    if not isinstance(obj, LevelGraph):
        raise HTTPException(status_code=400, detail="expected a single-graph document")
    return obj


def _require_proper(g: LevelGraph) -> LevelGraph:
    report = validate(g, require_proper=True)
    if not report.ok:
        raise HTTPException(status_code=400, detail=f"invalid instance: {report.summary()}")
    return g


def _witness_model(result: Infeasible) -> WitnessModel | None:
    if result.witness is None:
        return None
    return WitnessModel(
        edges=[WitnessEdgeModel(tail=e.tail, head=e.head, length=e.length, kind=e.kind) for e in result.witness.cycle],
        total=result.witness.total,
    )


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=ValidateResponse)
def validate_document(req: ValidateRequest) -> ValidateResponse:
    obj = _parse(req.document)
    graphs = (
        [obj.g1, obj.g2] if isinstance(obj, SimultaneousInstance) else [obj.g if isinstance(obj, PartialInstance) else obj]
    )
    violations: list[ViolationModel] = []
    for g in graphs:
        report = validate(g, require_proper=req.require_proper)
        violations.extend(
            ViolationModel(code=v.code, message=v.message, items=list(v.items)) for v in report.violations
        )
    return ValidateResponse(ok=not violations, violations=violations)


@app.post("/draw", response_model=DrawResponse)
def draw(req: DrawRequest) -> DrawResponse:
    g = _require_proper(_expect_graph(req.document))
    result = rightmost_drawing(g, req.slopes)
    if isinstance(result, Infeasible):
        return DrawResponse(feasible=False, witness=_witness_model(result), reason=result.reason)
    svg = render_svg(g, result, grid=req.grid) if req.svg else None
    return DrawResponse(feasible=True, coordinates=emit_drawing(result), svg=svg)


@app.post("/extend", response_model=DrawResponse)
def extend(req: DrawRequest) -> DrawResponse:
    obj = _parse(req.document)
    if not isinstance(obj, PartialInstance):
        raise HTTPException(status_code=400, detail="expected a document with a partial section")
    try:
        result = extend_partial(obj, req.slopes)
    except MalformedInstance as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if isinstance(result, Infeasible):
        return DrawResponse(feasible=False, witness=_witness_model(result), reason=result.reason)
    svg = render_svg(result.graph, result, grid=req.grid) if req.svg else None
    return DrawResponse(feasible=True, coordinates=emit_drawing(result), svg=svg)


@app.post("/simultaneous", response_model=SimultaneousResponse)
def simultaneous_drawings(req: DrawRequest) -> SimultaneousResponse:
    obj = _parse(req.document)
    if not isinstance(obj, SimultaneousInstance):
        raise HTTPException(status_code=400, detail="expected a document with two graph sections")
    try:
        result = simultaneous(obj, req.slopes)
    except MalformedInstance as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if isinstance(result, Infeasible):
        return SimultaneousResponse(feasible=False, witness=_witness_model(result), reason=result.reason)
    return SimultaneousResponse(
        feasible=True,
        first=emit_drawing(result.first),
        second=emit_drawing(result.second),
        iterations=result.iterations,
    )


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_document(req: EnumerateRequest) -> EnumerateResponse:
    g = _require_proper(_expect_graph(req.document))
    try:
        result = enumerate_drawings(g, req.slopes, req.max_vertices)
    except SizeGuardExceeded as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return EnumerateResponse(
        count=result.count,
        search_bound=result.search_bound,
        drawings=[emit_drawing(d) for d in result.drawings],
    )


@app.post("/dump/flow", response_model=DumpResponse)
def dump_flow(req: DumpRequest) -> DumpResponse:
    g = _require_proper(_expect_graph(req.document))
    g_aug, _ = add_boundaries(g)
    return DumpResponse(dump=dump_flow_network(build_flow_network(g_aug, req.slopes)))


@app.post("/dump/distance", response_model=DumpResponse)
def dump_distance(req: DumpRequest) -> DumpResponse:
    g = _require_proper(_expect_graph(req.document))
    g_aug, _ = add_boundaries(g)
    return DumpResponse(dump=dump_distance_graph(build_distance_graph(g_aug, req.slopes)))


@app.post("/render", response_model=RenderResponse)
def render(req: RenderRequest) -> RenderResponse:
    g = _require_proper(_expect_graph(req.document))
    result = rightmost_drawing(g, req.slopes)
    if isinstance(result, Infeasible):
        raise HTTPException(status_code=400, detail="instance has no drawing to render")
    return RenderResponse(
        svg=render_svg(g, result, unit=req.unit, radius=req.radius, grid=req.grid, labels=req.labels)
    )
