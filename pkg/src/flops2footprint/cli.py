"""Command-line front end.

Exit statuses: 0 success, 2 usage/input error, 1 internal error. Machine
output (csv/json) goes to stdout (or --output); warnings and diagnostics go
to stderr.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from . import registry
from .compute import Scenario, spec_from_dict, sweep as sweep_grid
from .errors import Flops2FootprintError
from .footprint import BenchmarkScore, compare as compare_models, estimate, fleet_aggregate
from .materials import load_profile
from .render import (
    FORMATS,
    render_comparison,
    render_fleet,
    render_registry,
    render_report,
    render_sweep,
)

DEFAULT_MFU = 0.30
DEFAULT_LIFESPAN = 2.0


def _fail(message: str) -> "NoReturn":  # noqa: F821
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def handle_input_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (Flops2FootprintError, ValueError) as exc:
            _fail(str(exc))
    return wrapper


def _resolve_model(name_or_path: str):
    if os.path.exists(name_or_path):
        with open(name_or_path) as fh:
            return spec_from_dict(json.load(fh))
    return registry.get_model(name_or_path)


def _resolve_profile(id_or_path: str):
    if os.path.exists(id_or_path):
        return load_profile(id_or_path)
    return registry.get_profile(id_or_path)


def _scenario(mfu: float, lifespan: float) -> Scenario:
    scenario = Scenario(mfu=mfu, lifespan_years=lifespan)
    if not scenario.mfu_in_empirical_range:
        click.echo(
            f"warning: MFU {mfu:g} is outside the empirically observed 20-60% range",
            err=True)
    return scenario


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _parse_float_list(raw: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        _fail(f"{flag} expects a comma-separated list of numbers, got {raw!r}")
    if not values:
        _fail(f"{flag} expects at least one value")
    return values


def common_options(command):
    for option in reversed([
        click.option("--profile", default=registry.DEFAULT_PROFILE_ID, show_default=True,
                     help="Hardware profile id or JSON file."),
        click.option("--precision", default=registry.DEFAULT_PRECISION, show_default=True,
                     help="Peak-throughput precision label."),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="table",
                     show_default=True),
        click.option("--output", default=None, help="Write output to a file instead of stdout."),
    ]):
        command = option(command)
    return command


@click.group()
def cli():
    """Turn AI-training compute budgets into GPU and material footprints."""


@cli.command("estimate")
@click.option("--model", required=True, help="Built-in model id or JSON spec file.")
@click.option("--mfu", type=float, default=DEFAULT_MFU, show_default=True)
@click.option("--lifespan", type=float, default=DEFAULT_LIFESPAN, show_default=True,
              help="Hardware lifespan in years.")
@common_options
@handle_input_errors
def estimate_cmd(model, mfu, lifespan, profile, precision, fmt, output):
    """Estimate GPUs and material footprint for one model and scenario."""
    spec = _resolve_model(model)
    gpu_profile = _resolve_profile(profile)
    report = estimate(spec, gpu_profile, precision, _scenario(mfu, lifespan))
    _emit(render_report(report, fmt), output)


@cli.command("sweep")
@click.option("--model", required=True, help="Built-in model id or JSON spec file.")
@click.option("--mfu", "mfu_list", default="0.2,0.3,0.4,0.5,0.6", show_default=True,
              help="Comma-separated MFU values.")
@click.option("--lifespan", "lifespan_list", default="1,2,3", show_default=True,
              help="Comma-separated lifespans in years.")
@common_options
@handle_input_errors
def sweep_cmd(model, mfu_list, lifespan_list, profile, precision, fmt, output):
    """Estimate over an MFU x lifespan grid (lifespan-major order)."""
    spec = _resolve_model(model)
    gpu_profile = _resolve_profile(profile)
    mfu_values = _parse_float_list(mfu_list, "--mfu")
    lifespan_values = _parse_float_list(lifespan_list, "--lifespan")
    reports = []
    for scenario, _requirement in sweep_grid(spec, gpu_profile, precision,
                                             mfu_values, lifespan_values):
        reports.append(estimate(spec, gpu_profile, precision, scenario))
    if any(not report.scenario.mfu_in_empirical_range for report in reports):
        click.echo("warning: grid includes MFU values outside the empirical 20-60% range",
                   err=True)
    _emit(render_sweep(spec.name, reports, fmt), output)


@cli.command("fleet")
@click.option("--models", "models_file", default=None,
              help="JSON file listing model ids or inline specs "
                   "(default: the nine built-in models).")
@click.option("--mfu", type=float, default=DEFAULT_MFU, show_default=True)
@click.option("--lifespan", type=float, default=DEFAULT_LIFESPAN, show_default=True)
@common_options
@handle_input_errors
def fleet_cmd(models_file, mfu, lifespan, profile, precision, fmt, output):
    """Aggregate GPU and material demand over a fleet of models."""
    if models_file:
        with open(models_file) as fh:
            entries = json.load(fh)
        if not isinstance(entries, list):
            _fail("--models file must contain a JSON list")
        specs = [spec_from_dict(entry) if isinstance(entry, dict) else _resolve_model(entry)
                 for entry in entries]
    else:
        specs = registry.builtin_models()
    gpu_profile = _resolve_profile(profile)
    scenario = _scenario(mfu, lifespan)
    reports = [estimate(spec, gpu_profile, precision, scenario) for spec in specs]
    _emit(render_fleet(fleet_aggregate(reports), fmt), output)


@cli.command("compare")
@click.option("--model-a", required=True, help="Baseline model id or spec file.")
@click.option("--model-b", required=True, help="Model compared against the baseline.")
@click.option("--mfu-a", type=float, default=DEFAULT_MFU, show_default=True)
@click.option("--lifespan-a", type=float, default=DEFAULT_LIFESPAN, show_default=True)
@click.option("--mfu-b", type=float, default=DEFAULT_MFU, show_default=True)
@click.option("--lifespan-b", type=float, default=DEFAULT_LIFESPAN, show_default=True)
@click.option("--scores", "scores_file", default=None,
              help="JSON file of {model_name, benchmark, score_percent} records.")
@common_options
@handle_input_errors
def compare_cmd(model_a, model_b, mfu_a, lifespan_a, mfu_b, lifespan_b,
                scores_file, profile, precision, fmt, output):
    """Compare two models' GPU demand, budgets, and benchmark scores."""
    spec_a = _resolve_model(model_a)
    spec_b = _resolve_model(model_b)
    gpu_profile = _resolve_profile(profile)
    scores = []
    if scores_file:
        with open(scores_file) as fh:
            entries = json.load(fh)
        if not isinstance(entries, list):
            _fail("--scores file must contain a JSON list")
        for entry in entries:
            scores.append(BenchmarkScore(model_name=entry["model_name"],
                                         benchmark=entry["benchmark"],
                                         score=float(entry["score_percent"])))
    comparison = compare_models(spec_a, spec_b,
                                _scenario(mfu_a, lifespan_a), _scenario(mfu_b, lifespan_b),
                                scores, gpu_profile, precision)
    _emit(render_comparison(comparison, fmt), output)


@cli.command("registry")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table",
              show_default=True)
@click.option("--output", default=None)
@handle_input_errors
def registry_cmd(fmt, output):
    """List built-in models, GPT-4 scenarios, and hardware profiles."""
    _emit(render_registry(registry.list_profiles(), fmt), output)


@cli.command("serve")
@click.option("--listen", default="127.0.0.1:8080", show_default=True,
              help="host:port to bind.")
@click.option("--cors-origin", multiple=True,
              help="Origin allowed for cross-origin requests (repeatable; '*' for any).")
@click.option("--serve-ui", default=None,
              help="Directory of static UI assets to serve at /.")
@handle_input_errors
def serve_cmd(listen, cors_origin, serve_ui):
    """Run the HTTP estimation service."""
    import uvicorn

    from .service import create_app

    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        _fail(f"--listen expects host:port, got {listen!r}")
    app = create_app(cors_origins=list(cors_origin) or None, ui_dir=serve_ui)
    uvicorn.run(app, host=host, port=int(port_text))


def main():
    cli()


if __name__ == "__main__":
    main()
