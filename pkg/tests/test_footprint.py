"""Material footprints, fleet aggregation, and model comparison."""

from __future__ import annotations

import math

import pytest

from flops2footprint import (
    BenchmarkScore,
    GpuRequirement,
    InputError,
    Scenario,
    compare,
    estimate,
    fleet_aggregate,
    get_model,
    material_footprint,
    toxic_mass,
    total_mass,
)
from flops2footprint.a100 import a100_profile
from flops2footprint.registry import builtin_models


@pytest.fixture(scope="module")
def a100():
    return a100_profile()


class TestMaterialFootprint:
    def test_single_gpu(self, a100):
        masses, total_kg, toxic_kg = material_footprint(GpuRequirement.from_exact(1.0), a100)
        assert len(masses) == 32
        assert list(masses) == sorted(masses)
        assert total_kg == pytest.approx(total_mass(a100) / 1000)
        assert toxic_kg == pytest.approx(toxic_mass(a100) / 1000)
        assert masses["Cu"] == pytest.approx(1.3747714, rel=1e-6)

    def test_scales_with_count(self, a100):
        one = material_footprint(GpuRequirement.from_exact(1.0), a100)
        thousand = material_footprint(GpuRequirement.from_exact(1000.0), a100)
        for symbol in one[0]:
            assert thousand[0][symbol] == pytest.approx(1000 * one[0][symbol], rel=1e-12)

    def test_uses_ceiled_count(self, a100):
        fractional = material_footprint(GpuRequirement.from_exact(2.01), a100)
        whole = material_footprint(GpuRequirement.from_exact(3.0), a100)
        assert fractional == whole


class TestEstimate:
    def test_gpt4_headline(self, a100):
        report = estimate(get_model("gpt-4"), a100, "BF16", Scenario(0.35, 1))
        assert report.requirement.count == 5029
        assert report.toxic_mass_kg == pytest.approx(5029 * 1.3935056, rel=1e-5)
        assert report.total_mass_kg == pytest.approx(5029 * 1.4974475, rel=1e-5)
        assert report.total_mass_kg_exact == pytest.approx(
            report.requirement.exact * 1.4974475, rel=1e-5)
        assert not report.mfu_out_of_empirical_range

    def test_out_of_range_flag(self, a100):
        report = estimate(get_model("falcon"), a100, "BF16", Scenario(0.95, 1))
        assert report.mfu_out_of_empirical_range

    def test_toxic_subset_of_total(self, a100):
        report = estimate(get_model("bloom"), a100, "BF16", Scenario(0.3, 2))
        assert 0 < report.toxic_mass_kg < report.total_mass_kg
        assert report.total_mass_kg == pytest.approx(
            math.fsum(report.element_masses_kg.values()), rel=1e-12)


class TestFleet:
    def test_matches_brute_force(self, a100):
        scenario = Scenario(0.2, 1)
        reports = [estimate(spec, a100, "BF16", scenario) for spec in builtin_models()]
        fleet = fleet_aggregate(reports)
        assert fleet.gpus_by_model == sum(r.requirement.count for r in reports)
        assert fleet.gpu_lifetimes_exact == pytest.approx(
            math.fsum(r.requirement.exact for r in reports), rel=0, abs=0)
        assert fleet.total_gpus == math.ceil(fleet.gpu_lifetimes_exact)
        assert fleet.total_mass_kg == pytest.approx(
            math.fsum(r.total_mass_kg for r in reports), rel=1e-12)
        for symbol in fleet.element_masses_kg:
            assert fleet.element_masses_kg[symbol] == pytest.approx(
                math.fsum(r.element_masses_kg[symbol] for r in reports), rel=1e-12)

    def test_known_totals(self, a100):
        scenario = Scenario(0.2, 1)
        fleet = fleet_aggregate(
            [estimate(spec, a100, "BF16", scenario) for spec in builtin_models()])
        assert fleet.total_gpus == 13314
        assert fleet.gpus_by_model == 13318

    def test_rejects_mixed_profiles(self, a100):
        report = estimate(get_model("falcon"), a100, "BF16", Scenario(0.3, 2))
        other = estimate(get_model("falcon"), a100, "BF16", Scenario(0.3, 2))
        object.__setattr__(other, "profile_id", "some-other-gpu")
        with pytest.raises(InputError, match="different profiles"):
            fleet_aggregate([report, other])

    def test_empty_fleet(self):
        fleet = fleet_aggregate([])
        assert fleet.total_gpus == 0
        assert fleet.total_mass_kg == 0.0


class TestBenchmarkScore:
    def test_bounds(self):
        BenchmarkScore(model_name="x", benchmark="mmlu", score=0)
        BenchmarkScore(model_name="x", benchmark="mmlu", score=100)
        with pytest.raises(ValueError):
            BenchmarkScore(model_name="x", benchmark="mmlu", score=101)
        with pytest.raises(ValueError):
            BenchmarkScore(model_name="x", benchmark="mmlu", score=-1)


class TestCompare:
    def test_gpu_and_budget_ratio(self, a100):
        comparison = compare(get_model("gpt-3.5"), get_model("gpt-4"),
                             Scenario(0.2, 2), Scenario(0.35, 2), [], a100, "BF16")
        assert comparison.requirement_a.count == 81
        assert comparison.requirement_b.count == 2515
        assert comparison.gpu_ratio == pytest.approx(2515 / 81)
        assert comparison.budget_ratio == pytest.approx(1.7316e25 / 3.15e23, rel=1e-9)

    def test_benchmark_deltas(self, a100):
        scores = [
            BenchmarkScore("gpt-3.5", "mmlu", 70.0),
            BenchmarkScore("gpt-4", "mmlu", 86.4),
            BenchmarkScore("gpt-4", "arc", 96.3),  # no baseline value; dropped
        ]
        comparison = compare(get_model("gpt-3.5"), get_model("gpt-4"),
                             Scenario(0.2, 2), Scenario(0.35, 2), scores, a100, "BF16")
        assert set(comparison.per_benchmark) == {"mmlu"}
        entry = comparison.per_benchmark["mmlu"]
        assert entry["delta_points"] == pytest.approx(16.4)
        assert entry["relative_change"] == pytest.approx(16.4 / 70.0)

    def test_unknown_score_model_rejected(self, a100):
        scores = [BenchmarkScore("claude", "mmlu", 80.0)]
        with pytest.raises(InputError, match="unknown model"):
            compare(get_model("gpt-3.5"), get_model("gpt-4"),
                    Scenario(0.2, 2), Scenario(0.35, 2), scores, a100, "BF16")
