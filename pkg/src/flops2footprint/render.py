"""Report serialization and rendering.

Three output formats: "table" for humans (thousands separators for GPU
counts, 4 significant figures for kilograms, scientific notation for FLOPs),
"csv" and "json" for machines. CSV and JSON carry full float precision and
contain identical values; both are deterministic byte-for-byte.
"""

from __future__ import annotations

import csv
import io
import json

from .compute import Scenario, compute_budget
from .footprint import ComparisonReport, FleetReport, FootprintReport
from .materials import GpuProfile, toxic_mass, total_mass
from . import registry

FORMATS = ("table", "csv", "json")


def fmt_count(value: int) -> str:
    return f"{value:,}"


def fmt_kg(value: float) -> str:
    return f"{value:.4g}"


def fmt_flops(value: float) -> str:
    return f"{value:.3e}"


def _scenario_dict(scenario: Scenario) -> dict:
    return {"mfu": scenario.mfu, "lifespan_years": scenario.lifespan_years}


def report_to_dict(report: FootprintReport) -> dict:
    return {
        "model": report.model_name,
        "profile": report.profile_id,
        "scenario": _scenario_dict(report.scenario),
        "gpus": {"exact": report.requirement.exact, "count": report.requirement.count},
        "element_masses_kg": dict(report.element_masses_kg),
        "total_mass_kg": report.total_mass_kg,
        "toxic_mass_kg": report.toxic_mass_kg,
        "total_mass_kg_exact": report.total_mass_kg_exact,
        "toxic_mass_kg_exact": report.toxic_mass_kg_exact,
        "mfu_out_of_empirical_range": report.mfu_out_of_empirical_range,
    }


def fleet_to_dict(fleet: FleetReport) -> dict:
    return {
        "total_gpus": fleet.total_gpus,
        "gpus_by_model": fleet.gpus_by_model,
        "gpu_lifetimes_exact": fleet.gpu_lifetimes_exact,
        "element_masses_kg": dict(fleet.element_masses_kg),
        "total_mass_kg": fleet.total_mass_kg,
        "toxic_mass_kg": fleet.toxic_mass_kg,
        "reports": [report_to_dict(report) for report in fleet.reports],
    }


def comparison_to_dict(comparison: ComparisonReport) -> dict:
    return {
        "model_a": comparison.model_a,
        "model_b": comparison.model_b,
        "scenario_a": _scenario_dict(comparison.scenario_a),
        "scenario_b": _scenario_dict(comparison.scenario_b),
        "gpus_a": {"exact": comparison.requirement_a.exact,
                   "count": comparison.requirement_a.count},
        "gpus_b": {"exact": comparison.requirement_b.exact,
                   "count": comparison.requirement_b.count},
        "gpu_ratio": comparison.gpu_ratio,
        "budget_ratio": comparison.budget_ratio,
        "per_benchmark": comparison.per_benchmark,
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# Report / sweep rows share one CSV layout.

def _csv_header(symbols: list[str]) -> list[str]:
    return ["model", "mfu", "lifespan_years", "gpus_exact", "gpus",
            *symbols, "total_kg", "toxic_kg"]


def _csv_row(report: FootprintReport, symbols: list[str]) -> list[str]:
    return [
        report.model_name,
        repr(report.scenario.mfu),
        repr(report.scenario.lifespan_years),
        repr(report.requirement.exact),
        str(report.requirement.count),
        *(repr(report.element_masses_kg[symbol]) for symbol in symbols),
        repr(report.total_mass_kg),
        repr(report.toxic_mass_kg),
    ]


def _reports_to_csv(reports: list[FootprintReport]) -> str:
    symbols = sorted(reports[0].element_masses_kg) if reports else []
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_csv_header(symbols))
    for report in reports:
        writer.writerow(_csv_row(report, symbols))
    return buffer.getvalue()


def _report_table(report: FootprintReport) -> str:
    scenario = report.scenario
    lines = [
        f"model:            {registry.display_name(report.model_name)} ({report.model_name})",
        f"profile:          {report.profile_id}",
        f"mfu:              {scenario.mfu:.0%}"
        + ("  [outside empirical 20-60% range]" if report.mfu_out_of_empirical_range else ""),
        f"lifespan:         {scenario.lifespan_years:g} year(s)",
        f"gpus:             {fmt_count(report.requirement.count)}"
        f"  (exact {report.requirement.exact:,.2f})",
        f"total mass:       {fmt_kg(report.total_mass_kg)} kg",
        f"toxic mass:       {fmt_kg(report.toxic_mass_kg)} kg",
        "",
        "element breakdown (kg):",
    ]
    by_mass = sorted(report.element_masses_kg.items(), key=lambda kv: (-kv[1], kv[0]))
    for symbol, mass_kg in by_mass:
        lines.append(f"  {symbol:<2}  {fmt_kg(mass_kg)}")
    return "\n".join(lines) + "\n"


def render_report(report: FootprintReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report_to_dict(report))
    if fmt == "csv":
        return _reports_to_csv([report])
    return _report_table(report)


def render_sweep(model_name: str, reports: list[FootprintReport], fmt: str) -> str:
    if fmt == "json":
        return to_json({"model": model_name,
                        "cells": [report_to_dict(report) for report in reports]})
    if fmt == "csv":
        return _reports_to_csv(reports)

    lines = [f"sweep for {registry.display_name(model_name)} ({model_name}):", ""]
    lines.append(f"{'mfu':>6}  {'lifespan':>8}  {'gpus':>12}  {'exact':>14}  "
                 f"{'total kg':>10}  {'toxic kg':>10}")
    for report in reports:
        lines.append(
            f"{report.scenario.mfu:>6.0%}  {report.scenario.lifespan_years:>8g}  "
            f"{fmt_count(report.requirement.count):>12}  {report.requirement.exact:>14,.2f}  "
            f"{fmt_kg(report.total_mass_kg):>10}  {fmt_kg(report.toxic_mass_kg):>10}")
    return "\n".join(lines) + "\n"


def render_fleet(fleet: FleetReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(fleet_to_dict(fleet))
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        symbols = sorted(fleet.element_masses_kg)
        writer.writerow(_csv_header(symbols))
        for report in fleet.reports:
            writer.writerow(_csv_row(report, symbols))
        writer.writerow([
            "TOTAL", "", "",
            repr(fleet.gpu_lifetimes_exact), str(fleet.total_gpus),
            *(repr(fleet.element_masses_kg[symbol]) for symbol in symbols),
            repr(fleet.total_mass_kg), repr(fleet.toxic_mass_kg),
        ])
        return buffer.getvalue()

    lines = ["fleet aggregate:", ""]
    lines.append(f"{'model':<18}  {'gpus':>10}  {'total kg':>10}  {'toxic kg':>10}")
    for report in fleet.reports:
        lines.append(f"{report.model_name:<18}  {fmt_count(report.requirement.count):>10}  "
                     f"{fmt_kg(report.total_mass_kg):>10}  {fmt_kg(report.toxic_mass_kg):>10}")
    lines.append("")
    lines.append(f"fleet gpus:          {fmt_count(fleet.total_gpus)}"
                 f"  (exact {fleet.gpu_lifetimes_exact:,.2f};"
                 f" {fmt_count(fleet.gpus_by_model)} charging whole devices per model)")
    lines.append(f"fleet total mass:    {fmt_kg(fleet.total_mass_kg)} kg")
    lines.append(f"fleet toxic mass:    {fmt_kg(fleet.toxic_mass_kg)} kg")
    return "\n".join(lines) + "\n"


def render_comparison(comparison: ComparisonReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(comparison_to_dict(comparison))
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["field", "value"])
        payload = comparison_to_dict(comparison)
        writer.writerow(["model_a", payload["model_a"]])
        writer.writerow(["model_b", payload["model_b"]])
        writer.writerow(["gpus_a", str(comparison.requirement_a.count)])
        writer.writerow(["gpus_b", str(comparison.requirement_b.count)])
        writer.writerow(["gpu_ratio", repr(comparison.gpu_ratio)])
        writer.writerow(["budget_ratio", repr(comparison.budget_ratio)])
        for benchmark, entry in comparison.per_benchmark.items():
            writer.writerow([f"{benchmark}_delta_points", repr(entry["delta_points"])])
            writer.writerow([f"{benchmark}_relative_change", repr(entry["relative_change"])])
        return buffer.getvalue()

    lines = [
        f"comparison: {comparison.model_b} vs baseline {comparison.model_a}",
        "",
        f"gpus {comparison.model_a}:  {fmt_count(comparison.requirement_a.count)}"
        f"  @ MFU {comparison.scenario_a.mfu:.0%}, {comparison.scenario_a.lifespan_years:g} yr",
        f"gpus {comparison.model_b}:  {fmt_count(comparison.requirement_b.count)}"
        f"  @ MFU {comparison.scenario_b.mfu:.0%}, {comparison.scenario_b.lifespan_years:g} yr",
        f"gpu ratio (b/a):     {comparison.gpu_ratio:.2f}",
        f"budget ratio (b/a):  {comparison.budget_ratio:.2f}",
    ]
    if comparison.per_benchmark:
        lines.append("")
        lines.append(f"{'benchmark':<12}  {'a':>7}  {'b':>7}  {'delta':>7}  {'rel':>8}")
        for benchmark, entry in comparison.per_benchmark.items():
            lines.append(f"{benchmark:<12}  {entry['score_a']:>7.1f}  {entry['score_b']:>7.1f}  "
                         f"{entry['delta_points']:>+7.1f}  {entry['relative_change']:>+8.1%}")
    return "\n".join(lines) + "\n"


def registry_to_dict(profiles: list[GpuProfile]) -> dict:
    models = [registry.model_summary(spec) for spec in registry.builtin_models()]
    scenarios = [registry.model_summary(spec, kind="gpt4_scenario", label=label)
                 for label, spec in registry.gpt4_scenarios()]
    return {
        "models": models,
        "gpt4_scenarios": scenarios,
        "profiles": [
            {
                "id": profile.id,
                "display_name": profile.display_name,
                "precisions": sorted(profile.peak_throughput),
                "element_count": len(profile.composition),
                "total_mass_g": total_mass(profile),
                "toxic_mass_g": toxic_mass(profile),
            }
            for profile in profiles
        ],
    }


def render_registry(profiles: list[GpuProfile], fmt: str) -> str:
    payload = registry_to_dict(profiles)
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["kind", "id", "display_name", "architecture",
                         "compute_budget_flops", "details"])
        for entry in payload["models"] + payload["gpt4_scenarios"]:
            writer.writerow([entry["kind"], entry["id"], entry["display_name"],
                             entry["architecture"], repr(entry["compute_budget_flops"]), ""])
        for entry in payload["profiles"]:
            writer.writerow(["profile", entry["id"], entry["display_name"], "", "",
                             f"{entry['element_count']} elements"])
        return buffer.getvalue()

    lines = ["models:"]
    for entry in payload["models"]:
        lines.append(f"  {entry['id']:<22}  {entry['architecture']:<5}  "
                     f"budget {fmt_flops(entry['compute_budget_flops'])} FLOPs")
    lines.append("")
    lines.append("gpt-4 scenarios (13T tokens each):")
    for entry in payload["gpt4_scenarios"]:
        lines.append(f"  {entry['id']:<28}  active {fmt_flops(entry['active_parameters'])}  "
                     f"budget {fmt_flops(entry['compute_budget_flops'])} FLOPs")
    lines.append("")
    lines.append("profiles:")
    for entry in payload["profiles"]:
        lines.append(f"  {entry['id']:<22}  {entry['display_name']}  "
                     f"({entry['element_count']} elements, "
                     f"{fmt_kg(entry['total_mass_g'] / 1000)} kg)")
    return "\n".join(lines) + "\n"
