"""HTTP surface: ingestion, reasoning, queries, exports, and the UI bundle.

Every response body is JSON except graph exports (Turtle / N-Triples).
Non-success responses carry exactly one error object:
``{"error": {"code": ..., "message": ..., "detail": ...}}``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse, RedirectResponse
from fastapi.staticfiles import StaticFiles

from .model import parse_datetime
from .queries import QueryScope, UnknownEntityError, co_attendees_csv, intersections_csv
from .service import ApiError, TraceStore, overlap_mode, resolve_instance, vocabulary_summary
from .turtle import TurtleSyntaxError, serialize_ntriples, serialize_turtle
from .vocabulary import VocabularyError


def create_app(store: Optional[TraceStore] = None, ui_dir: Optional[str] = None) -> FastAPI:
    store = store or TraceStore()
    app = FastAPI(title="tracekg", version="0.1.0")
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.as_dict()})

    def fail(code: str, message: str, status: int = 400, detail=None):
        raise ApiError(code, message, detail, status)

    @app.get("/health")
    def health():
        graph, classification = store.snapshot()
        return {
            "status": "ok",
            "triples": len(graph),
            "reasoned": classification is not None,
        }

    @app.post("/import")
    async def import_graph(request: Request):
        body = (await request.body()).decode("utf-8")
        if not body.strip():
            fail("empty-import", "request body carried no statements")
        try:
            added = store.import_text(body)
        except TurtleSyntaxError as exc:
            fail("syntax-error", str(exc), detail={"line": exc.line, "column": exc.column})
        graph, _ = store.snapshot()
        return {"added": added, "triples": len(graph)}

    @app.post("/events")
    async def post_event(request: Request):
        try:
            doc = await request.json()
        except Exception:
            fail("invalid-json", "request body is not valid JSON")
        event_id = store.add_event(doc)
        graph, _ = store.snapshot()
        return {"event": event_id, "triples": len(graph)}

    @app.post("/reason")
    def reason():
        return store.reason()

    @app.get("/events/{event_id:path}/risk")
    def event_risk(event_id: str):
        return store.risk_of(event_id)

    @app.get("/queries/intersections")
    def intersections(
        place: Optional[str] = None,
        city: Optional[str] = None,
        begin: Optional[str] = None,
        end: Optional[str] = None,
        mode: Optional[str] = None,
        format: str = Query("json", pattern="^(json|csv)$"),
    ):
        scope = QueryScope(
            place=resolve_instance(place) if place else None,
            city=city,
            begin=_parse_dt(begin, "begin"),
            end=_parse_dt(end, "end"),
        )
        rows = store.query_engine().find_intersections(scope, overlap_mode(mode))
        if format == "csv":
            return PlainTextResponse(intersections_csv(rows), media_type="text/csv")
        return {"results": [r.as_dict() for r in rows]}

    @app.get("/queries/co-attendees")
    def co_attendees(
        person: str,
        risk: str = "ClosedSpace",
        format: str = Query("json", pattern="^(json|csv)$"),
    ):
        engine = store.query_engine()
        try:
            rows = engine.co_attendees(resolve_instance(person), risk)
        except UnknownEntityError as exc:
            fail("unknown-risk-class", f"unknown risk class {exc.entity}", status=404)
        except VocabularyError as exc:
            fail("unknown-risk-class", str(exc), status=404)
        if format == "csv":
            return PlainTextResponse(co_attendees_csv(rows), media_type="text/csv")
        return {
            "results": [r.as_dict() for r in rows],
            "diagnostics": [str(d) for d in engine.diagnostics],
        }

    @app.get("/graph/neighborhood")
    def neighborhood(center: str, depth: int = 1, limit: int = 50):
        if depth < 0 or limit < 1:
            fail("invalid-parameters", "depth must be >= 0 and limit >= 1")
        engine = store.query_engine()
        try:
            result = engine.neighborhood(resolve_instance(center), depth, limit)
        except UnknownEntityError as exc:
            fail("unknown-entity", f"no such node: {exc.entity}", status=404)
        return result.as_dict()

    @app.get("/vocabulary")
    def vocabulary():
        return vocabulary_summary(store.vocab)

    @app.get("/export")
    def export(
        layer: str = Query("asserted", pattern="^(asserted|inferred|all)$"),
        format: str = Query("turtle", pattern="^(turtle|ntriples)$"),
    ):
        graph, classification = store.snapshot()
        if layer in ("inferred", "all") and classification is None:
            fail("not-reasoned", "no inference layer; run reasoning first", status=409)
        if layer == "asserted":
            out = graph
        elif layer == "inferred":
            out = classification.inferred
        else:
            out = graph.copy()
            out.add_all(classification.inferred)
        if format == "ntriples":
            return PlainTextResponse(serialize_ntriples(out), media_type="application/n-triples")
        return PlainTextResponse(serialize_turtle(out), media_type="text/turtle")

    def _parse_dt(value: Optional[str], name: str):
        if value is None or value == "":
            return None
        try:
            return parse_datetime(value)
        except ValueError:
            fail("invalid-parameters", f"{name} is not an ISO-8601 date-time", detail=value)

    bundle = Path(ui_dir) if ui_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if bundle.is_dir():
        app.mount("/ui", StaticFiles(directory=str(bundle), html=True), name="ui")

        @app.get("/")
        def index():
            return RedirectResponse(url="/ui/")

    return app
