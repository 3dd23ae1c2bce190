"""Session-oriented HTTP API for incremental judgment elicitation.

A session holds a judgment matrix under construction (unset cells default to
0, the neutral point), optionally an attached decision matrix and timing
set. Writing cell (i, j) atomically writes the mirrored (j, i) cell, so
antisymmetry cannot be broken through the API. Every accepted mutation bumps
the session revision by one and snapshots the session to a JSON file when a
state directory is configured.
"""

from __future__ import annotations

import json
import math
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .decision import (
    CriteriaMismatchError,
    DecisionMatrix,
    rank_models,
    ranking_report,
    with_efficiency_column,
)
from .pairwise import (
    PairwiseOppositeMatrix,
    accordance_report,
    rau_utilities,
    weights_from_pom,
)


class ApiError(Exception):
    """Error carried to the client as ``{code, message, details}``."""

    def __init__(self, status: int, code: str, message: str, details: Any = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details


@dataclass
class SessionState:
    id: str
    criteria: tuple[str, ...]
    kappa: float
    entries: list[list[float]]
    scores: dict | None = None
    timings: dict[str, float] | None = None
    revision: int = 0
    created: str = ""
    updated: str = ""
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "criteria": list(self.criteria),
            "kappa": self.kappa,
            "entries": [row[:] for row in self.entries],
            "scores": self.scores,
            "timings": self.timings,
            "revision": self.revision,
            "created": self.created,
            "updated": self.updated,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "SessionState":
        return cls(
            id=payload["id"],
            criteria=tuple(payload["criteria"]),
            kappa=float(payload["kappa"]),
            entries=[list(map(float, row)) for row in payload["entries"]],
            scores=payload.get("scores"),
            timings=payload.get("timings"),
            revision=int(payload["revision"]),
            created=payload.get("created", ""),
            updated=payload.get("updated", ""),
        )


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class SessionStore:
    """In-memory sessions with optional JSON snapshots per session."""

    def __init__(self, state_dir: Path | None = None):
        self._sessions: dict[str, SessionState] = {}
        self._registry_lock = threading.Lock()
        self._state_dir = state_dir
        if state_dir is not None:
            state_dir.mkdir(parents=True, exist_ok=True)
            for snapshot in sorted(state_dir.glob("*.json")):
                state = SessionState.from_dict(json.loads(snapshot.read_text(encoding="utf-8")))
                self._sessions[state.id] = state

    def create(self, criteria: list[str], kappa: float) -> SessionState:
        if len(criteria) < 2:
            raise ApiError(400, "too_few_criteria", "at least two criteria are required")
        if len(set(criteria)) != len(criteria):
            raise ApiError(400, "duplicate_criteria", "criteria names must be unique")
        if not math.isfinite(kappa) or kappa <= 0:
            raise ApiError(400, "invalid_kappa", f"kappa must be positive and finite, got {kappa}")
        state = SessionState(
            id=uuid.uuid4().hex,
            criteria=tuple(criteria),
            kappa=float(kappa),
            entries=[[0.0] * len(criteria) for _ in criteria],
            revision=0,
            created=_now(),
            updated=_now(),
        )
        with self._registry_lock:
            self._sessions[state.id] = state
        self._persist(state)
        return state

    def get(self, session_id: str) -> SessionState:
        with self._registry_lock:
            state = self._sessions.get(session_id)
        if state is None:
            raise ApiError(404, "unknown_session", f"no session with id {session_id!r}")
        return state

    def _persist(self, state: SessionState) -> None:
        if self._state_dir is None:
            return
        path = self._state_dir / f"{state.id}.json"
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(state.to_dict(), indent=2) + "\n", encoding="utf-8")
        tmp.replace(path)

    def commit(self, state: SessionState) -> None:
        """Record an accepted mutation: bump revision and snapshot."""
        state.revision += 1
        state.updated = _now()
        self._persist(state)


class CreateSessionBody(BaseModel):
    criteria: list[str]
    kappa: float = 8.0


class JudgmentBody(BaseModel):
    value: float


class ScoresBody(BaseModel):
    models: list[str]
    criteria: list[str]
    scores: list[list[float]]


class TimingsBody(BaseModel):
    timings: dict[str, float]


class JudgmentOverride(BaseModel):
    i: int
    j: int
    value: float


class ScoreOverride(BaseModel):
    model_name: str = Field(alias="model")
    criterion: str
    value: float

    model_config = {"populate_by_name": True}


class WhatIfBody(BaseModel):
    judgment_overrides: list[JudgmentOverride] = Field(default_factory=list)
    score_overrides: list[ScoreOverride] = Field(default_factory=list)
    efficiency: bool = False


def _check_judgment(state: SessionState, i: int, j: int, value: float) -> None:
    n = len(state.criteria)
    if not (0 <= i < n and 0 <= j < n):
        raise ApiError(400, "index_out_of_range", f"cell ({i}, {j}) outside a {n}x{n} matrix")
    if i == j:
        raise ApiError(400, "diagonal_write", "diagonal cells are fixed at 0")
    if not math.isfinite(value) or abs(value) > state.kappa:
        raise ApiError(
            400,
            "value_out_of_range",
            f"|value| must be at most kappa = {state.kappa}, got {value}",
        )


def _pom(state: SessionState, entries: list[list[float]] | None = None) -> PairwiseOppositeMatrix:
    return PairwiseOppositeMatrix(
        criteria=state.criteria,
        entries=entries if entries is not None else state.entries,
        kappa=state.kappa,
    )


def _weights_payload(state: SessionState) -> dict:
    pom = _pom(state)
    utilities = rau_utilities(pom)
    weights = weights_from_pom(pom)
    accordance = accordance_report(pom)
    return {
        "criteria": list(state.criteria),
        "kappa": state.kappa,
        "utilities": list(utilities.values),
        "weights": weights.as_dict(),
        "ai": accordance.ai,
        "verdict": accordance.verdict.value,
        "revision": state.revision,
    }


def _decision_matrix(scores_payload: dict) -> DecisionMatrix:
    return DecisionMatrix(
        models=tuple(scores_payload["models"]),
        criteria=tuple(scores_payload["criteria"]),
        scores=scores_payload["scores"],
    )


def _ranking_payload(
    state: SessionState,
    include_efficiency: bool,
    judgment_overrides: Sequence[JudgmentOverride] = (),
    score_overrides: Sequence[ScoreOverride] = (),
) -> dict:
    entries = [row[:] for row in state.entries]
    for override in judgment_overrides:
        _check_judgment(state, override.i, override.j, override.value)
        entries[override.i][override.j] = override.value
        entries[override.j][override.i] = -override.value

    if state.scores is None:
        raise ApiError(409, "missing_scores", "attach a decision matrix before ranking")
    scores_payload = {
        "models": list(state.scores["models"]),
        "criteria": list(state.scores["criteria"]),
        "scores": [row[:] for row in state.scores["scores"]],
    }
    for override in score_overrides:
        if override.model_name not in scores_payload["models"]:
            raise ApiError(400, "unknown_model", f"no model named {override.model_name!r}")
        if override.criterion not in scores_payload["criteria"]:
            raise ApiError(400, "unknown_criterion", f"no criterion named {override.criterion!r}")
        if not math.isfinite(override.value):
            raise ApiError(400, "invalid_score", "score overrides must be finite")
        r = scores_payload["models"].index(override.model_name)
        c = scores_payload["criteria"].index(override.criterion)
        scores_payload["scores"][r][c] = override.value

    matrix = _decision_matrix(scores_payload)
    if include_efficiency:
        if state.timings is None:
            raise ApiError(409, "missing_timings", "attach timings before ranking with efficiency")
        matrix = with_efficiency_column(matrix, state.timings)

    pom = _pom(state, entries)
    weights = weights_from_pom(pom)
    accordance = accordance_report(pom)
    try:
        ranking = rank_models(matrix, weights)
    except CriteriaMismatchError as exc:
        raise ApiError(
            409,
            "criteria_mismatch",
            str(exc),
            details={"missing": list(exc.missing), "unexpected": list(exc.unexpected)},
        ) from exc
    report = ranking_report(weights, accordance, ranking)
    report["include_efficiency"] = include_efficiency
    report["revision"] = state.revision
    return report


def create_app(state_dir: Path | None = None, static_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="cpccms service")
    store = SessionStore(state_dir=state_dir)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "details": exc.details},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={
                "code": "validation_error",
                "message": "request body failed validation",
                "details": exc.errors(),
            },
        )

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        state = store.create(body.criteria, body.kappa)
        return {"id": state.id}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        state = store.get(session_id)
        with state.lock:
            payload = state.to_dict()
            payload.update(
                {k: v for k, v in _weights_payload(state).items() if k in ("ai", "verdict", "weights")}
            )
        return payload

    @app.put("/sessions/{session_id}/judgments/{i}/{j}")
    def set_judgment(session_id: str, i: int, j: int, body: JudgmentBody):
        state = store.get(session_id)
        with state.lock:
            _check_judgment(state, i, j, body.value)
            state.entries[i][j] = body.value
            state.entries[j][i] = -body.value
            store.commit(state)
            payload = _weights_payload(state)
        return payload

    @app.put("/sessions/{session_id}/scores")
    def attach_scores(session_id: str, body: ScoresBody):
        state = store.get(session_id)
        scores_payload = {"models": body.models, "criteria": body.criteria, "scores": body.scores}
        try:
            _decision_matrix(scores_payload)
        except ValueError as exc:
            raise ApiError(400, "invalid_scores", str(exc)) from exc
        with state.lock:
            state.scores = scores_payload
            store.commit(state)
            return {"revision": state.revision}

    @app.put("/sessions/{session_id}/timings")
    def attach_timings(session_id: str, body: TimingsBody):
        state = store.get(session_id)
        for name, seconds in body.timings.items():
            if not math.isfinite(seconds) or seconds <= 0:
                raise ApiError(
                    400, "invalid_timing", f"running time for {name!r} must be positive, got {seconds}"
                )
        with state.lock:
            state.timings = dict(body.timings)
            store.commit(state)
            return {"revision": state.revision}

    @app.get("/sessions/{session_id}/weights")
    def get_weights(session_id: str):
        state = store.get(session_id)
        with state.lock:
            return _weights_payload(state)

    @app.get("/sessions/{session_id}/ranking")
    def get_ranking(session_id: str, efficiency: bool = False):
        state = store.get(session_id)
        with state.lock:
            return _ranking_payload(state, include_efficiency=efficiency)

    @app.post("/sessions/{session_id}/whatif")
    def whatif(session_id: str, body: WhatIfBody):
        state = store.get(session_id)
        with state.lock:
            return _ranking_payload(
                state,
                include_efficiency=body.efficiency,
                judgment_overrides=body.judgment_overrides,
                score_overrides=body.score_overrides,
            )

    if static_dir is not None and static_dir.exists():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
