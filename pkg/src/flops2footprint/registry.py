"""Built-in model and profile registries.

The model registry ships the large-scale dense transformers trained on A100
hardware plus five GPT-4 mixture-of-experts activation scenarios (the
SemiAnalysis configuration is the default meaning of "gpt-4"). Token and
parameter counts marked provenance="estimated" rest on industry conventions
or credible leaks rather than official disclosures.

Extra hardware profiles can be dropped as JSON files into a directory named
by the F2F_PROFILE_DIR environment variable; they are resolved by file stem.
"""

from __future__ import annotations

import os
from pathlib import Path

from .a100 import A100_PROFILE_ID, a100_profile
from .compute import ModelSpec, compute_budget
from .errors import NotFoundError
from .materials import GpuProfile, load_profile

PROFILE_DIR_ENV = "F2F_PROFILE_DIR"

DEFAULT_PROFILE_ID = A100_PROFILE_ID
DEFAULT_PRECISION = "BF16"

GPT4_TOTAL_PARAMETERS = 1.76e12
GPT4_TOKENS = 13e12

# Plausible GPT-4 active-parameter configurations, 13T training tokens each.
# SemiAnalysis is the conservative default used wherever "gpt-4" appears.
_GPT4_SCENARIOS = [
    ("George Hotz", 440e9),
    ("SemiAnalysis", 222e9),
    ("Ling-1T-like", 50e9),
    ("DeepSeek-V3-like", 37e9),
    ("Llama 4 Maverick-like", 17e9),
]

GPT4_DEFAULT_SCENARIO = "SemiAnalysis"


def _gpt4_spec(label: str, active: float, name: str = "gpt-4") -> ModelSpec:
    return ModelSpec(
        name=name,
        architecture="moe",
        total_parameters=GPT4_TOTAL_PARAMETERS,
        active_parameters=active,
        tokens=GPT4_TOKENS,
        reported_mfu=0.35,
        provenance="estimated",
    )


def _scenario_id(label: str) -> str:
    return "gpt-4-" + label.lower().replace(" ", "-")


def gpt4_scenarios() -> list[tuple[str, ModelSpec]]:
    """The built-in GPT-4 MoE activation scenarios as (label, spec) pairs."""
    return [
        (label, _gpt4_spec(label, active, name=_scenario_id(label)))
        for label, active in _GPT4_SCENARIOS
    ]


def _dense(name, parameters, tokens, *, reported_mfu=None, provenance="official",
           flops_override=None) -> ModelSpec:
    return ModelSpec(name=name, architecture="dense", parameters=parameters,
                     tokens=tokens, reported_mfu=reported_mfu,
                     flops_override=flops_override, provenance=provenance)


def builtin_models() -> list[ModelSpec]:
    """The nine built-in training runs, largest compute budget first."""
    gpt4_active = dict(_GPT4_SCENARIOS)[GPT4_DEFAULT_SCENARIO]
    return [
        _gpt4_spec(GPT4_DEFAULT_SCENARIO, gpt4_active),
        _dense("amazon-titan", 200e9, 4e12),
        # Token count is an industry estimate, not an official disclosure.
        _dense("mistral-large-2", 123e9, 2e12, provenance="estimated"),
        _dense("llama-2", 70e9, 2e12, reported_mfu=0.53),
        _dense("deepseek-llm", 67e9, 2e12),
        _dense("bloom", 176e9, 366e9),
        _dense("gpt-3.5", 175e9, 300e9, provenance="estimated"),
        _dense("falcon", 40e9, 1e12),
        # 12B parameters x 300B tokens; some published renderings misprint the
        # budget's exponent, and only 2.16e22 is consistent with 6·N·D.
        _dense("pythia", 12e9, 300e9),
    ]


DISPLAY_NAMES = {
    "gpt-4": "GPT-4",
    "amazon-titan": "Amazon Titan TG-1",
    "mistral-large-2": "Mistral Large 2",
    "llama-2": "LLaMa 2",
    "deepseek-llm": "DeepSeekLLM",
    "bloom": "BLOOM",
    "gpt-3.5": "GPT-3.5",
    "falcon": "Falcon",
    "pythia": "Pythia",
}


def display_name(model_name: str) -> str:
    return DISPLAY_NAMES.get(model_name, model_name)


def _model_index() -> dict[str, ModelSpec]:
    index = {spec.name: spec for spec in builtin_models()}
    for _label, spec in gpt4_scenarios():
        index[spec.name] = spec
    return index


def get_model(name: str) -> ModelSpec:
    """Resolve a built-in model or GPT-4 scenario by id (case-insensitive)."""
    index = _model_index()
    spec = index.get(name) or index.get(name.lower())
    if spec is None:
        known = ", ".join(sorted(index))
        raise NotFoundError(f"unknown model {name!r} (known: {known})")
    return spec


def model_names() -> list[str]:
    return list(_model_index())


def get_profile(profile_id: str) -> GpuProfile:
    """Resolve a profile by id: embedded first, then F2F_PROFILE_DIR."""
    if profile_id == A100_PROFILE_ID:
        return a100_profile()
    search_dir = os.environ.get(PROFILE_DIR_ENV)
    if search_dir:
        candidate = Path(search_dir) / f"{profile_id}.json"
        if candidate.is_file():
            return load_profile(candidate)
    raise NotFoundError(f"unknown profile {profile_id!r}")


def list_profiles() -> list[GpuProfile]:
    """All resolvable profiles: embedded plus any in F2F_PROFILE_DIR."""
    profiles = [a100_profile()]
    search_dir = os.environ.get(PROFILE_DIR_ENV)
    if search_dir and Path(search_dir).is_dir():
        for path in sorted(Path(search_dir).glob("*.json")):
            profile = load_profile(path)
            if profile.id not in {existing.id for existing in profiles}:
                profiles.append(profile)
    return profiles


def model_summary(spec: ModelSpec, kind: str = "model", label: str | None = None) -> dict:
    """Registry listing entry with the recomputed compute budget."""
    entry = {
        "id": spec.name,
        "display_name": label or display_name(spec.name),
        "kind": kind,
        "architecture": spec.architecture,
        "tokens": spec.tokens,
        "provenance": spec.provenance,
        "compute_budget_flops": compute_budget(spec),
    }
    if spec.architecture == "dense":
        entry["parameters"] = spec.parameters
    else:
        entry["total_parameters"] = spec.total_parameters
        entry["active_parameters"] = spec.active_parameters
    if spec.reported_mfu is not None:
        entry["reported_mfu"] = spec.reported_mfu
    return entry
