"""Material footprints: elemental mass of GPU requirements, fleets, comparisons.

Per-element masses scale by the ceiled integer GPU count (whole devices are
extracted and disposed of); the exact-requirement-based totals are exposed
alongside for fractional-wear analysis. Masses are reported in kilograms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .compute import ModelSpec, Scenario, adjusted_gpus, compute_budget, GpuRequirement
from .errors import InputError
from .materials import GpuProfile, toxic_mass, total_mass


@dataclass(frozen=True)
class FootprintReport:
    """GPU requirement and elemental masses for one model under one scenario."""

    model_name: str
    profile_id: str
    scenario: Scenario
    requirement: GpuRequirement
    element_masses_kg: dict[str, float]
    total_mass_kg: float
    toxic_mass_kg: float
    total_mass_kg_exact: float
    toxic_mass_kg_exact: float

    @property
    def mfu_out_of_empirical_range(self) -> bool:
        return not self.scenario.mfu_in_empirical_range


@dataclass(frozen=True)
class FleetReport:
    """Aggregate over several per-model reports computed on one profile.

    ``gpu_lifetimes_exact`` is the summed exact requirement; ``total_gpus`` is
    its ceiling, the whole devices a back-to-back training sequence of the
    fleet would consume. ``gpus_by_model`` sums the per-model ceiled counts
    (each model charged whole devices on its own), which is also what the
    mass totals are built from.
    """

    reports: tuple[FootprintReport, ...]
    total_gpus: int
    gpus_by_model: int
    gpu_lifetimes_exact: float
    element_masses_kg: dict[str, float]
    total_mass_kg: float
    toxic_mass_kg: float


@dataclass(frozen=True)
class BenchmarkScore:
    """A user-supplied benchmark result in percent."""

    model_name: str
    benchmark: str
    score: float

    def __post_init__(self):
        if not 0 <= self.score <= 100:
            raise ValueError(f"score must be in [0, 100], got {self.score}")


@dataclass(frozen=True)
class ComparisonReport:
    """Resource and benchmark comparison of model B against baseline A."""

    model_a: str
    model_b: str
    scenario_a: Scenario
    scenario_b: Scenario
    requirement_a: GpuRequirement
    requirement_b: GpuRequirement
    gpu_ratio: float
    budget_ratio: float
    per_benchmark: dict[str, dict[str, float]] = field(default_factory=dict)


def material_footprint(requirement: GpuRequirement, profile: GpuProfile,
                       ) -> tuple[dict[str, float], float, float]:
    """Per-element mass in kg for a GPU requirement, plus total and toxic kg."""
    count = requirement.count
    masses = {
        record.symbol: record.total_g * count / 1000.0
        for record in sorted(profile.composition, key=lambda r: r.symbol)
    }
    return masses, total_mass(profile) * count / 1000.0, toxic_mass(profile) * count / 1000.0


def estimate(spec: ModelSpec, profile: GpuProfile, precision: str,
             scenario: Scenario) -> FootprintReport:
    """Full per-model report: adjusted GPU requirement plus material masses."""
    requirement = adjusted_gpus(spec, profile, precision, scenario)
    masses, total_kg, toxic_kg = material_footprint(requirement, profile)
    return FootprintReport(
        model_name=spec.name,
        profile_id=profile.id,
        scenario=scenario,
        requirement=requirement,
        element_masses_kg=masses,
        total_mass_kg=total_kg,
        toxic_mass_kg=toxic_kg,
        total_mass_kg_exact=total_mass(profile) * requirement.exact / 1000.0,
        toxic_mass_kg_exact=toxic_mass(profile) * requirement.exact / 1000.0,
    )


def fleet_aggregate(reports: list[FootprintReport]) -> FleetReport:
    """Element-wise and GPU sums over per-model reports (same profile only)."""
    profiles = {report.profile_id for report in reports}
    if len(profiles) > 1:
        raise InputError(f"fleet mixes reports from different profiles: {sorted(profiles)}")

    element_masses: dict[str, float] = {}
    for report in reports:
        for symbol, mass_kg in report.element_masses_kg.items():
            element_masses[symbol] = element_masses.get(symbol, 0.0) + mass_kg
    element_masses = dict(sorted(element_masses.items()))

    exact_sum = math.fsum(report.requirement.exact for report in reports)
    return FleetReport(
        reports=tuple(reports),
        total_gpus=math.ceil(exact_sum),
        gpus_by_model=sum(report.requirement.count for report in reports),
        gpu_lifetimes_exact=exact_sum,
        element_masses_kg=element_masses,
        total_mass_kg=math.fsum(report.total_mass_kg for report in reports),
        toxic_mass_kg=math.fsum(report.toxic_mass_kg for report in reports),
    )


def compare(spec_a: ModelSpec, spec_b: ModelSpec, scenario_a: Scenario,
            scenario_b: Scenario, scores: list[BenchmarkScore],
            profile: GpuProfile, precision: str) -> ComparisonReport:
    """Compare model B against baseline A in GPUs, budget, and benchmarks."""
    requirement_a = adjusted_gpus(spec_a, profile, precision, scenario_a)
    requirement_b = adjusted_gpus(spec_b, profile, precision, scenario_b)

    known = {spec_a.name, spec_b.name}
    scores_a: dict[str, float] = {}
    scores_b: dict[str, float] = {}
    for score in scores:
        if score.model_name not in known:
            raise InputError(
                f"benchmark score references unknown model {score.model_name!r}; "
                f"comparison covers {sorted(known)}")
        target = scores_a if score.model_name == spec_a.name else scores_b
        target[score.benchmark] = score.score

    per_benchmark = {}
    for benchmark in sorted(scores_a.keys() & scores_b.keys()):
        a, b = scores_a[benchmark], scores_b[benchmark]
        per_benchmark[benchmark] = {
            "score_a": a,
            "score_b": b,
            "delta_points": b - a,
            "relative_change": (b - a) / a if a != 0 else math.inf,
        }

    return ComparisonReport(
        model_a=spec_a.name,
        model_b=spec_b.name,
        scenario_a=scenario_a,
        scenario_b=scenario_b,
        requirement_a=requirement_a,
        requirement_b=requirement_b,
        gpu_ratio=requirement_b.count / requirement_a.count,
        budget_ratio=compute_budget(spec_b) / compute_budget(spec_a),
        per_benchmark=per_benchmark,
    )
