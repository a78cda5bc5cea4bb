"""FLOPs pipeline: compute budgets, GPU throughput, and GPU-count scenarios.

The accounting model is sequential training: a model trains on one GPU until
the device reaches end of life, then moves to the next. That converts a
compute budget directly into consumed GPU lifetimes without any wall-clock
feasibility claim. All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .materials import GpuProfile

SECONDS_PER_YEAR = 365 * 24 * 60 * 60  # fixed 365-day year

FLOPS_PER_PARAM_PER_TOKEN = 6

# Empirically reported utilization range for large-scale training runs.
# Values outside it are legal but flagged in results.
EMPIRICAL_MFU_MIN = 0.20
EMPIRICAL_MFU_MAX = 0.60

DENSE = "dense"
MOE = "moe"


@dataclass(frozen=True)
class ModelSpec:
    """An AI model's architecture and training-scale inputs.

    Dense models carry ``parameters``; mixture-of-experts (MoE) models carry
    ``total_parameters`` and ``active_parameters``, and only the active
    parameters enter the compute budget. ``flops_override`` bypasses the
    6·N·D heuristic when an authoritative budget is known.
    """

    name: str
    architecture: str
    tokens: float
    parameters: float | None = None
    total_parameters: float | None = None
    active_parameters: float | None = None
    reported_mfu: float | None = None
    flops_override: float | None = None
    provenance: str = "official"

    def __post_init__(self):
        if self.architecture not in (DENSE, MOE):
            raise ValueError(f"unknown architecture {self.architecture!r}")
        if not self.tokens > 0:
            raise ValueError("token count must be > 0")
        if self.architecture == DENSE:
            if self.parameters is None or not self.parameters > 0:
                raise ValueError("dense model needs parameters > 0")
        else:
            if self.total_parameters is None or not self.total_parameters > 0:
                raise ValueError("MoE model needs total_parameters > 0")
            if self.active_parameters is None or not self.active_parameters > 0:
                raise ValueError("MoE model needs active_parameters > 0")
            if self.active_parameters > self.total_parameters:
                raise ValueError("active_parameters cannot exceed total_parameters")
        if self.reported_mfu is not None and not 0 < self.reported_mfu <= 1:
            raise ValueError("reported_mfu must be in (0, 1]")
        if self.flops_override is not None and not self.flops_override > 0:
            raise ValueError("flops_override must be > 0")
        if self.provenance not in ("official", "estimated"):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def effective_parameters(self) -> float:
        """Parameter count that enters the budget (active parameters for MoE)."""
        if self.architecture == MOE:
            assert self.active_parameters is not None
            return self.active_parameters
        assert self.parameters is not None
        return self.parameters


@dataclass(frozen=True)
class Scenario:
    """An (MFU, hardware lifespan) operating-condition pair."""

    mfu: float
    lifespan_years: float

    def __post_init__(self):
        if not 0 < self.mfu <= 1:
            raise ValueError(f"mfu must be in (0, 1], got {self.mfu}")
        if not self.lifespan_years > 0:
            raise ValueError(f"lifespan_years must be > 0, got {self.lifespan_years}")

    @property
    def mfu_in_empirical_range(self) -> bool:
        return EMPIRICAL_MFU_MIN <= self.mfu <= EMPIRICAL_MFU_MAX


@dataclass(frozen=True)
class GpuRequirement:
    """GPU lifetimes consumed: the exact real value and its ceiling."""

    exact: float
    count: int

    @classmethod
    def from_exact(cls, exact: float) -> "GpuRequirement":
        if exact < 0:
            raise ValueError("GPU requirement cannot be negative")
        return cls(exact=exact, count=math.ceil(exact))


def compute_budget(spec: ModelSpec) -> float:
    """Training compute budget in FLOPs (6 per parameter per token)."""
    if spec.flops_override is not None:
        return spec.flops_override
    return FLOPS_PER_PARAM_PER_TOKEN * spec.effective_parameters * spec.tokens


def annual_throughput(peak_flops_per_s: float) -> float:
    """FLOPs one device delivers over a year of continuous peak operation."""
    if not peak_flops_per_s > 0:
        raise ValueError("peak throughput must be > 0")
    return peak_flops_per_s * SECONDS_PER_YEAR


def lifetime_throughput(peak_flops_per_s: float, lifespan_years: float) -> float:
    """FLOPs one device delivers over its whole operational lifespan."""
    if not lifespan_years > 0:
        raise ValueError("lifespan must be > 0")
    return annual_throughput(peak_flops_per_s) * lifespan_years


def required_gpus(budget: float, peak_flops_per_s: float, lifespan_years: float) -> float:
    """Idealized (100% utilization) GPU lifetimes needed for a budget."""
    if budget < 0:
        raise ValueError("budget cannot be negative")
    return budget / lifetime_throughput(peak_flops_per_s, lifespan_years)


def scaling_factor(mfu: float) -> float:
    """Inefficiency multiplier compensating for utilization below peak."""
    if not 0 < mfu <= 1:
        raise ValueError(f"mfu must be in (0, 1], got {mfu}")
    return 1.0 / mfu


def adjusted_gpus(spec: ModelSpec, profile: GpuProfile, precision: str,
                  scenario: Scenario) -> GpuRequirement:
    """Utilization-adjusted GPU requirement for one model under one scenario."""
    peak = profile.peak_flops_per_s(precision)
    exact = (required_gpus(compute_budget(spec), peak, scenario.lifespan_years)
             * scaling_factor(scenario.mfu))
    return GpuRequirement.from_exact(exact)


def sweep(spec: ModelSpec, profile: GpuProfile, precision: str,
          mfu_values: list[float], lifespan_values: list[float],
          ) -> list[tuple[Scenario, GpuRequirement]]:
    """Requirements over a scenario grid, ordered lifespan-major then MFU."""
    if not mfu_values or not lifespan_values:
        raise InputError("sweep needs at least one MFU and one lifespan value")
    grid = []
    for lifespan in lifespan_values:
        for mfu in mfu_values:
            scenario = Scenario(mfu=mfu, lifespan_years=lifespan)
            grid.append((scenario, adjusted_gpus(spec, profile, precision, scenario)))
    return grid


def savings(base: Scenario, improved: Scenario) -> float:
    """Fractional reduction of the exact GPU requirement between two scenarios.

    The exact requirement scales as 1 / (mfu * lifespan), so the reduction is
    model-independent.
    """
    return 1.0 - (base.mfu * base.lifespan_years) / (improved.mfu * improved.lifespan_years)


def spec_from_dict(document: dict) -> ModelSpec:
    """Build a ModelSpec from the model-spec document schema."""
    if not isinstance(document, dict):
        raise ValueError("model spec document must be an object")
    name = document.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("model spec is missing 'name'")
    architecture = document.get("architecture")
    if architecture not in (DENSE, MOE):
        raise ValueError(f"model {name}: architecture must be 'dense' or 'moe'")

    params = document.get("parameters")
    kwargs: dict = {}
    if architecture == DENSE:
        if not isinstance(params, (int, float)) or isinstance(params, bool):
            raise ValueError(f"model {name}: dense 'parameters' must be a number")
        kwargs["parameters"] = float(params)
    else:
        if not isinstance(params, dict):
            raise ValueError(f"model {name}: MoE 'parameters' must be an object with "
                             "total_parameters and active_parameters")
        for key in ("total_parameters", "active_parameters"):
            value = params.get(key)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ValueError(f"model {name}: '{key}' must be a number")
            kwargs[key] = float(value)

    tokens = document.get("tokens")
    if not isinstance(tokens, (int, float)) or isinstance(tokens, bool):
        raise ValueError(f"model {name}: 'tokens' must be a number")

    for optional in ("reported_mfu", "flops_override"):
        value = document.get(optional)
        if value is not None:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ValueError(f"model {name}: '{optional}' must be a number")
            kwargs[optional] = float(value)

    return ModelSpec(name=name, architecture=architecture, tokens=float(tokens),
                     provenance=document.get("provenance", "official"), **kwargs)


def spec_to_dict(spec: ModelSpec) -> dict:
    """Serialize a ModelSpec to the model-spec document schema."""
    document: dict = {"name": spec.name, "architecture": spec.architecture}
    if spec.architecture == DENSE:
        document["parameters"] = spec.parameters
    else:
        document["parameters"] = {
            "total_parameters": spec.total_parameters,
            "active_parameters": spec.active_parameters,
        }
    document["tokens"] = spec.tokens
    if spec.reported_mfu is not None:
        document["reported_mfu"] = spec.reported_mfu
    if spec.flops_override is not None:
        document["flops_override"] = spec.flops_override
    document["provenance"] = spec.provenance
    return document
