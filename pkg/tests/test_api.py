"""HTTP service endpoints, status codes, and error bodies."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from flops2footprint import Scenario, estimate, get_model
from flops2footprint.a100 import a100_profile
from flops2footprint.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.text == "ok"


class TestListings:
    def test_models(self, client):
        payload = client.get("/v1/models").json()
        assert len(payload["models"]) == 9
        assert len(payload["gpt4_scenarios"]) == 5
        by_id = {entry["id"]: entry for entry in payload["models"]}
        assert by_id["gpt-4"]["architecture"] == "moe"
        assert by_id["pythia"]["compute_budget_flops"] == pytest.approx(2.16e22)

    def test_profiles(self, client):
        payload = client.get("/v1/profiles").json()
        assert payload["profiles"][0]["id"] == "nvidia-a100-sxm-40gb"
        assert payload["profiles"][0]["element_count"] == 32


class TestEstimate:
    def test_matches_library(self, client):
        response = client.post("/v1/estimate", json={
            "model": "gpt-4", "mfu": 0.35, "lifespan_years": 1})
        assert response.status_code == 200
        payload = response.json()
        report = estimate(get_model("gpt-4"), a100_profile(), "BF16", Scenario(0.35, 1))
        assert payload["gpus"]["count"] == 5029
        assert payload["gpus"]["exact"] == report.requirement.exact
        assert payload["toxic_mass_kg"] == report.toxic_mass_kg

    def test_defaults_applied(self, client):
        payload = client.post("/v1/estimate", json={"model": "falcon"}).json()
        assert payload["scenario"] == {"mfu": 0.30, "lifespan_years": 2.0}

    def test_inline_spec(self, client):
        response = client.post("/v1/estimate", json={
            "model": {"name": "custom", "architecture": "dense",
                      "parameters": 10e9, "tokens": 1e12}})
        assert response.status_code == 200
        assert response.json()["model"] == "custom"

    def test_unknown_model_404(self, client):
        response = client.post("/v1/estimate", json={"model": "gpt-99"})
        assert response.status_code == 404
        body = response.json()
        assert body["code"] == "not_found"
        assert "message" in body

    def test_unknown_profile_404(self, client):
        response = client.post("/v1/estimate", json={"model": "gpt-4",
                                                     "profile": "h100"})
        assert response.status_code == 404

    def test_invalid_mfu_422(self, client):
        response = client.post("/v1/estimate", json={"model": "gpt-4", "mfu": 1.5})
        assert response.status_code == 422
        assert response.json()["code"] == "invalid_input"

    def test_bad_type_422(self, client):
        response = client.post("/v1/estimate", json={"model": "gpt-4", "mfu": "high"})
        assert response.status_code == 422

    def test_malformed_json_400(self, client):
        response = client.post("/v1/estimate", content="{not json",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400
        assert response.json()["code"] == "malformed_body"

    def test_non_object_body_400(self, client):
        response = client.post("/v1/estimate", json=[1, 2, 3])
        assert response.status_code == 400

    def test_out_of_range_flagged(self, client):
        payload = client.post("/v1/estimate", json={"model": "gpt-4", "mfu": 0.95}).json()
        assert payload["mfu_out_of_empirical_range"] is True


class TestSweep:
    def test_grid(self, client):
        response = client.post("/v1/sweep", json={
            "model": "gpt-4", "mfu_values": [0.2, 0.5], "lifespan_values": [1, 2, 3]})
        assert response.status_code == 200
        cells = response.json()["cells"]
        assert [c["gpus"]["count"] for c in cells] == [8800, 3520, 4400, 1760, 2934, 1174]

    def test_missing_axes_422(self, client):
        response = client.post("/v1/sweep", json={"model": "gpt-4"})
        assert response.status_code == 422


class TestCompare:
    def test_basic(self, client):
        response = client.post("/v1/compare", json={
            "model_a": "gpt-3.5", "model_b": "gpt-4",
            "scenario_a": {"mfu": 0.2, "lifespan_years": 2},
            "scenario_b": {"mfu": 0.35, "lifespan_years": 2},
            "scores": [
                {"model_name": "gpt-3.5", "benchmark": "mmlu", "score_percent": 70.0},
                {"model_name": "gpt-4", "benchmark": "mmlu", "score_percent": 86.4},
            ]})
        assert response.status_code == 200
        payload = response.json()
        assert payload["gpus_a"]["count"] == 81
        assert payload["gpus_b"]["count"] == 2515
        assert payload["per_benchmark"]["mmlu"]["delta_points"] == pytest.approx(16.4)

    def test_unknown_score_model_422(self, client):
        response = client.post("/v1/compare", json={
            "model_a": "gpt-3.5", "model_b": "gpt-4",
            "scores": [{"model_name": "claude", "benchmark": "mmlu",
                        "score_percent": 80.0}]})
        assert response.status_code == 422


class TestSavings:
    def test_exact_fractions(self, client):
        response = client.post("/v1/savings", json={
            "base": {"mfu": 0.2, "lifespan_years": 1},
            "improved": {"mfu": 0.2, "lifespan_years": 5}})
        assert response.status_code == 200
        assert response.json()["savings_fraction"] == 0.8
