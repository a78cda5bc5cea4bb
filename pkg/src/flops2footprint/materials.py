"""GPU hardware profiles: peak throughput ratings and per-component elemental composition.

A profile describes one whole hardware unit. Masses are held in grams
internally; report layers convert to kilograms. Profiles are immutable after
load and safe to share across threads.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import NotFoundError, ProfileValidationError


class ComponentId(str, Enum):
    HEATSINK = "heatsink"
    PCB = "pcb"
    GPU_CHIP = "gpu_chip"
    POP = "pop"


# Relative tolerance between a declared total and the sum of its component masses.
DECLARED_TOTAL_TOLERANCE = 0.01

_SYMBOL_RE = re.compile(r"^[A-Z][a-z]?$")


@dataclass(frozen=True)
class ElementRecord:
    """One chemical element's mass breakdown across hardware components.

    A component absent from ``masses`` contributed no detectable mass (0 g).
    ``declared_total_g`` is the source document's own total, kept for
    validation only; computations always use the component sum.
    """

    symbol: str
    name: str
    toxic: bool
    masses: dict[ComponentId, float]
    declared_total_g: float | None = None

    def mass_g(self, component: ComponentId) -> float:
        return self.masses.get(component, 0.0)

    @property
    def total_g(self) -> float:
        return math.fsum(self.masses.values())


@dataclass(frozen=True)
class GpuProfile:
    """A hardware unit's peak throughput per precision and elemental composition."""

    id: str
    display_name: str
    peak_throughput: dict[str, float]  # precision label -> FLOPs per second
    composition: tuple[ElementRecord, ...]
    source: str = ""

    def element(self, symbol: str) -> ElementRecord:
        for record in self.composition:
            if record.symbol == symbol:
                return record
        raise NotFoundError(f"element {symbol!r} not present in profile {self.id!r}")

    def peak_flops_per_s(self, precision: str) -> float:
        try:
            return self.peak_throughput[precision]
        except KeyError:
            raise NotFoundError(
                f"profile {self.id!r} has no peak throughput for precision {precision!r}"
            ) from None


def element_total(profile: GpuProfile, symbol: str) -> float:
    """Total mass in grams of one element, summed over all components."""
    return profile.element(symbol).total_g


def total_mass(profile: GpuProfile) -> float:
    """Total detected mass of the unit in grams."""
    return math.fsum(record.total_g for record in profile.composition)


def toxic_mass(profile: GpuProfile) -> float:
    """Mass in grams of elements flagged as toxic or hazardous."""
    return math.fsum(record.total_g for record in profile.composition if record.toxic)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ProfileValidationError(message)


def _parse_element(entry: object) -> ElementRecord:
    _require(isinstance(entry, dict), f"element entry must be an object, got {type(entry).__name__}")
    assert isinstance(entry, dict)
    symbol = entry.get("symbol")
    _require(isinstance(symbol, str) and bool(_SYMBOL_RE.match(symbol or "")),
             f"element symbol {symbol!r} is not a 1-2 letter chemical symbol")
    name = entry.get("name")
    _require(isinstance(name, str) and name != "", f"element {symbol}: missing name")
    toxic = entry.get("toxic")
    _require(isinstance(toxic, bool), f"element {symbol}: 'toxic' must be a boolean")

    raw_masses = entry.get("masses")
    _require(isinstance(raw_masses, dict), f"element {symbol}: 'masses' must be an object")
    assert isinstance(raw_masses, dict)
    masses: dict[ComponentId, float] = {}
    for key, value in raw_masses.items():
        try:
            component = ComponentId(key)
        except ValueError:
            raise ProfileValidationError(
                f"element {symbol}: unknown component {key!r}"
            ) from None
        _require(isinstance(value, (int, float)) and not isinstance(value, bool),
                 f"element {symbol}: mass for {key!r} must be a number")
        _require(float(value) >= 0.0, f"element {symbol}: negative mass for component {key!r}")
        masses[component] = float(value)

    declared = entry.get("declared_total_g")
    if declared is not None:
        _require(isinstance(declared, (int, float)) and not isinstance(declared, bool),
                 f"element {symbol}: declared_total_g must be a number")
        declared = float(declared)
        _require(declared >= 0.0, f"element {symbol}: declared_total_g is negative")
        component_sum = math.fsum(masses.values())
        if declared > 0.0:
            _require(abs(component_sum - declared) / declared <= DECLARED_TOTAL_TOLERANCE,
                     f"element {symbol}: component masses sum to {component_sum:g} g, "
                     f"more than 1% away from declared total {declared:g} g")
        else:
            _require(component_sum == 0.0,
                     f"element {symbol}: declared total is 0 g but components sum to {component_sum:g} g")

    return ElementRecord(symbol=symbol, name=name, toxic=bool(toxic),
                         masses=masses, declared_total_g=declared)


def load_profile(source) -> GpuProfile:
    """Load and validate a hardware profile.

    ``source`` may be a parsed document (dict), a path to a JSON file, a JSON
    string, or a readable file object.
    """
    document = _read_document(source)
    _require(isinstance(document, dict), "profile document must be a JSON object")
    assert isinstance(document, dict)

    profile_id = document.get("id")
    _require(isinstance(profile_id, str) and profile_id != "", "profile is missing 'id'")
    display_name = document.get("display_name")
    _require(isinstance(display_name, str) and display_name != "",
             f"profile {profile_id}: missing 'display_name'")

    raw_peaks = document.get("peak_throughput")
    _require(isinstance(raw_peaks, dict) and len(raw_peaks) > 0,
             f"profile {profile_id}: 'peak_throughput' must be a non-empty object")
    assert isinstance(raw_peaks, dict)
    peaks: dict[str, float] = {}
    for label, value in raw_peaks.items():
        _require(isinstance(label, str) and label != "",
                 f"profile {profile_id}: bad precision label {label!r}")
        _require(isinstance(value, (int, float)) and not isinstance(value, bool)
                 and float(value) > 0.0,
                 f"profile {profile_id}: peak throughput for {label!r} must be > 0")
        peaks[label] = float(value)

    raw_elements = document.get("elements")
    _require(isinstance(raw_elements, list),
             f"profile {profile_id}: 'elements' must be a list")
    assert isinstance(raw_elements, list)
    records = tuple(_parse_element(entry) for entry in raw_elements)
    seen: set[str] = set()
    for record in records:
        _require(record.symbol not in seen,
                 f"profile {profile_id}: duplicate element symbol {record.symbol!r}")
        seen.add(record.symbol)

    source_note = document.get("source", "")
    _require(isinstance(source_note, str), f"profile {profile_id}: 'source' must be text")

    return GpuProfile(id=profile_id, display_name=display_name,
                      peak_throughput=peaks, composition=records, source=source_note)


def _read_document(source):
    if isinstance(source, dict):
        return source
    if isinstance(source, Path):
        return json.loads(source.read_text())
    if isinstance(source, str):
        if os.path.exists(source):
            with open(source) as fh:
                return json.load(fh)
        try:
            return json.loads(source)
        except json.JSONDecodeError:
            raise ProfileValidationError(
                f"profile source {source!r} is neither an existing file nor valid JSON"
            ) from None
    if hasattr(source, "read"):
        return json.load(source)
    raise ProfileValidationError(f"unsupported profile source type {type(source).__name__}")


def profile_to_dict(profile: GpuProfile) -> dict:
    """Serialize a profile back to the document schema (round-trip stable)."""
    return {
        "id": profile.id,
        "display_name": profile.display_name,
        "peak_throughput": dict(profile.peak_throughput),
        "elements": [
            {
                "symbol": record.symbol,
                "name": record.name,
                "toxic": record.toxic,
                "masses": {component.value: mass for component, mass in record.masses.items()},
                **({"declared_total_g": record.declared_total_g}
                   if record.declared_total_g is not None else {}),
            }
            for record in profile.composition
        ],
        "source": profile.source,
    }
