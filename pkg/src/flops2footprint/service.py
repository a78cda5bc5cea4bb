"""HTTP estimation service.

A thin FastAPI layer over the estimation library. All endpoints live under
/v1; responses reuse the same serializers as the CLI's JSON output, so both
surfaces emit identical numbers. Errors come back as
``{"code": ..., "message": ..., "field": ...}`` with 400 for malformed JSON,
404 for unknown models/profiles, and 422 for invalid values.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from . import registry
from .compute import Scenario, savings, spec_from_dict
from .errors import InputError, NotFoundError, ProfileValidationError
from .footprint import BenchmarkScore, compare, estimate
from .render import comparison_to_dict, registry_to_dict, report_to_dict

DEFAULT_MFU = 0.30
DEFAULT_LIFESPAN = 2.0


def _error_body(code: str, message: str, field: str | None = None) -> dict:
    body = {"code": code, "message": message}
    if field is not None:
        body["field"] = field
    return body


def _number(payload: dict, key: str, default: float | None = None) -> float:
    value = payload.get(key, default)
    if value is None:
        raise InputError(f"missing required field '{key}'")
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InputError(f"'{key}' must be a number")
    return float(value)


def _scenario(payload: dict, prefix: str = "") -> Scenario:
    return Scenario(
        mfu=_number(payload, prefix + "mfu", DEFAULT_MFU),
        lifespan_years=_number(payload, prefix + "lifespan_years", DEFAULT_LIFESPAN),
    )


def _resolve_model(payload: dict, key: str = "model"):
    value = payload.get(key)
    if isinstance(value, str):
        return registry.get_model(value)
    if isinstance(value, dict):
        return spec_from_dict(value)
    raise InputError(f"'{key}' must be a model id or an inline model spec object")


def _resolve_profile(payload: dict):
    profile_id = payload.get("profile", registry.DEFAULT_PROFILE_ID)
    if not isinstance(profile_id, str):
        raise InputError("'profile' must be a profile id string")
    return registry.get_profile(profile_id)


def _precision(payload: dict) -> str:
    precision = payload.get("precision", registry.DEFAULT_PRECISION)
    if not isinstance(precision, str):
        raise InputError("'precision' must be a string")
    return precision


async def _json_body(request: Request) -> dict:
    try:
        payload = await request.json()
    except json.JSONDecodeError:
        raise MalformedBodyError("request body is not valid JSON")
    if not isinstance(payload, dict):
        raise MalformedBodyError("request body must be a JSON object")
    return payload


class MalformedBodyError(Exception):
    pass


def create_app(cors_origins: list[str] | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="flops2footprint", docs_url=None, redoc_url=None)

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(CORSMiddleware, allow_origins=cors_origins,
                           allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(MalformedBodyError)
    async def malformed_handler(request: Request, exc: MalformedBodyError):
        return JSONResponse(status_code=400,
                            content=_error_body("malformed_body", str(exc)))

    @app.exception_handler(NotFoundError)
    async def not_found_handler(request: Request, exc: NotFoundError):
        return JSONResponse(status_code=404,
                            content=_error_body("not_found", str(exc)))

    @app.exception_handler(InputError)
    async def input_handler(request: Request, exc: InputError):
        return JSONResponse(status_code=422,
                            content=_error_body("invalid_input", str(exc)))

    @app.exception_handler(ProfileValidationError)
    async def profile_handler(request: Request, exc: ProfileValidationError):
        return JSONResponse(status_code=422,
                            content=_error_body("invalid_profile", str(exc)))

    @app.exception_handler(ValueError)
    async def value_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=422,
                            content=_error_body("invalid_input", str(exc)))

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content=_error_body("malformed_body", str(exc)))

    @app.get("/healthz", response_class=PlainTextResponse)
    async def healthz() -> str:
        return "ok"

    @app.get("/v1/models")
    async def models():
        payload = registry_to_dict([])
        return {"models": payload["models"], "gpt4_scenarios": payload["gpt4_scenarios"]}

    @app.get("/v1/profiles")
    async def profiles():
        return {"profiles": registry_to_dict(registry.list_profiles())["profiles"]}

    @app.post("/v1/estimate")
    async def estimate_endpoint(request: Request):
        payload = await _json_body(request)
        spec = _resolve_model(payload)
        profile = _resolve_profile(payload)
        report = estimate(spec, profile, _precision(payload), _scenario(payload))
        return report_to_dict(report)

    @app.post("/v1/sweep")
    async def sweep_endpoint(request: Request):
        payload = await _json_body(request)
        spec = _resolve_model(payload)
        profile = _resolve_profile(payload)
        precision = _precision(payload)

        mfu_values = payload.get("mfu_values")
        lifespan_values = payload.get("lifespan_values")
        for key, values in (("mfu_values", mfu_values), ("lifespan_values", lifespan_values)):
            if (not isinstance(values, list) or not values
                    or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                               for v in values)):
                raise InputError(f"'{key}' must be a non-empty list of numbers")

        cells = []
        for lifespan in lifespan_values:
            for mfu in mfu_values:
                scenario = Scenario(mfu=float(mfu), lifespan_years=float(lifespan))
                cells.append(report_to_dict(estimate(spec, profile, precision, scenario)))
        return {"model": spec.name, "cells": cells}

    @app.post("/v1/compare")
    async def compare_endpoint(request: Request):
        payload = await _json_body(request)
        spec_a = _resolve_model(payload, "model_a")
        spec_b = _resolve_model(payload, "model_b")
        profile = _resolve_profile(payload)
        scenario_a = _scenario(payload.get("scenario_a") or {})
        scenario_b = _scenario(payload.get("scenario_b") or {})

        scores = []
        for entry in payload.get("scores", []):
            if not isinstance(entry, dict):
                raise InputError("'scores' entries must be objects", )
            scores.append(BenchmarkScore(
                model_name=str(entry.get("model_name", "")),
                benchmark=str(entry.get("benchmark", "")),
                score=_number(entry, "score_percent"),
            ))

        comparison = compare(spec_a, spec_b, scenario_a, scenario_b, scores,
                             profile, _precision(payload))
        return comparison_to_dict(comparison)

    @app.post("/v1/savings")
    async def savings_endpoint(request: Request):
        payload = await _json_body(request)
        base = _scenario(payload.get("base") or {})
        improved = _scenario(payload.get("improved") or {})
        return {
            "base": {"mfu": base.mfu, "lifespan_years": base.lifespan_years},
            "improved": {"mfu": improved.mfu, "lifespan_years": improved.lifespan_years},
            "savings_fraction": savings(base, improved),
        }

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
