"""Property-based invariants of the estimation pipeline."""

from __future__ import annotations

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from flops2footprint import (
    GpuRequirement,
    Scenario,
    adjusted_gpus,
    compute_budget,
    fleet_aggregate,
    material_footprint,
    estimate,
    required_gpus,
    savings,
)
from flops2footprint.a100 import a100_profile
from flops2footprint.registry import builtin_models

A100 = a100_profile()
MODELS = builtin_models()

mfus = st.floats(min_value=0.01, max_value=1.0, allow_nan=False)
lifespans = st.floats(min_value=0.1, max_value=10.0, allow_nan=False)
model_specs = st.sampled_from(MODELS)


@given(spec=model_specs, lifespan=lifespans)
def test_mfu_one_is_identity(spec, lifespan):
    scenario = Scenario(mfu=1.0, lifespan_years=lifespan)
    adjusted = adjusted_gpus(spec, A100, "BF16", scenario)
    idealized = required_gpus(compute_budget(spec), 3.12e14, lifespan)
    assert adjusted.exact == idealized


@given(spec=model_specs, mfu_low=mfus, mfu_high=mfus, lifespan=lifespans)
def test_strictly_decreasing_in_mfu(spec, mfu_low, mfu_high, lifespan):
    if mfu_low == mfu_high:
        return
    if mfu_low > mfu_high:
        mfu_low, mfu_high = mfu_high, mfu_low
    low = adjusted_gpus(spec, A100, "BF16", Scenario(mfu_low, lifespan)).exact
    high = adjusted_gpus(spec, A100, "BF16", Scenario(mfu_high, lifespan)).exact
    assert high < low


@given(spec=model_specs, mfu=mfus, short=lifespans, long=lifespans)
def test_strictly_decreasing_in_lifespan(spec, mfu, short, long):
    if short == long:
        return
    if short > long:
        short, long = long, short
    brief = adjusted_gpus(spec, A100, "BF16", Scenario(mfu, short)).exact
    extended = adjusted_gpus(spec, A100, "BF16", Scenario(mfu, long)).exact
    assert extended < brief


@given(spec=model_specs, mfu=mfus, lifespan=lifespans)
def test_conservation(spec, mfu, lifespan):
    """exact x mfu x lifespan is a scenario-independent constant per model."""
    scenario = Scenario(mfu, lifespan)
    exact = adjusted_gpus(spec, A100, "BF16", scenario).exact
    constant = required_gpus(compute_budget(spec), 3.12e14, 1.0)
    assert math.isclose(exact * mfu * lifespan, constant, rel_tol=1e-9)


@given(count=st.integers(min_value=0, max_value=10**6))
def test_footprint_linear_in_count(count):
    requirement = GpuRequirement(exact=float(count), count=count)
    masses, total_kg, toxic_kg = material_footprint(requirement, A100)
    unit_masses, unit_total, unit_toxic = material_footprint(
        GpuRequirement(exact=1.0, count=1), A100)
    assert math.isclose(total_kg, count * unit_total, rel_tol=1e-12, abs_tol=0.0)
    assert math.isclose(toxic_kg, count * unit_toxic, rel_tol=1e-12, abs_tol=0.0)
    for symbol, mass in masses.items():
        assert math.isclose(mass, count * unit_masses[symbol], rel_tol=1e-12, abs_tol=0.0)


@settings(max_examples=25)
@given(subset=st.lists(model_specs, min_size=1, max_size=9, unique_by=lambda s: s.name),
       mfu=mfus, lifespan=lifespans)
def test_fleet_equals_brute_force(subset, mfu, lifespan):
    scenario = Scenario(mfu, lifespan)
    reports = [estimate(spec, A100, "BF16", scenario) for spec in subset]
    fleet = fleet_aggregate(reports)
    assert fleet.gpus_by_model == sum(r.requirement.count for r in reports)
    assert fleet.total_mass_kg == math.fsum(r.total_mass_kg for r in reports)
    assert fleet.toxic_mass_kg == math.fsum(r.toxic_mass_kg for r in reports)
    for symbol, mass in fleet.element_masses_kg.items():
        assert math.isclose(
            mass, math.fsum(r.element_masses_kg[symbol] for r in reports),
            rel_tol=1e-12, abs_tol=0.0)


@given(base_mfu=mfus, base_life=lifespans, new_mfu=mfus, new_life=lifespans,
       spec=model_specs)
def test_savings_matches_requirements(base_mfu, base_life, new_mfu, new_life, spec):
    base = Scenario(base_mfu, base_life)
    improved = Scenario(new_mfu, new_life)
    before = adjusted_gpus(spec, A100, "BF16", base).exact
    after = adjusted_gpus(spec, A100, "BF16", improved).exact
    assert math.isclose(1 - after / before, savings(base, improved),
                        rel_tol=1e-9, abs_tol=1e-12)
