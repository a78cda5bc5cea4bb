"""Embedded Nvidia A100 SXM 40 GB profile.

Elemental masses (grams) come from an ICP-OES teardown of one unit,
broken down by heatsink, PCB, GPU chip (die + VRAM), and power-on-package
(PoP) voltage regulators. The teardown's own rounded "total" column is kept
as declared_total_g for cross-checking; all computations use the component
sum. Unmeasured residues (pyrolysis carbon, oxide oxygen) are not included,
so the profile is a lower bound on true material content.

Toxic flags mark elements that are inherently toxic or hazardous through
vapor/dust exposure during extraction and processing.
"""

from __future__ import annotations

from .materials import GpuProfile, load_profile

A100_PROFILE_ID = "nvidia-a100-sxm-40gb"

# (symbol, name, toxic, heatsink g, pcb g, gpu_chip g, pop g, declared total g)
# A None component mass means "not detected" and is stored as absent (0 g).
_ELEMENTS = [
    ("Ag", "Silver",    False, 4.32e-01, 1.02e-01, 1.13e-02, 7.85e-03, 0.553),
    ("Al", "Aluminum",  False, 1.89e+00, 4.33e+00, 4.18e-01, 2.65e-01, 6.90e+00),
    ("As", "Arsenic",   True,  2.69e-02, 5.92e-03, 2.87e-04, 3.75e-04, 3.35e-02),
    ("Au", "Gold",      False, 2.96e-02, 1.01e-02, 1.15e-03, 1.71e-03, 4.26e-02),
    ("B",  "Boron",     False, 2.77e-01, 4.30e-01, 6.04e-02, 1.47e-02, 7.82e-01),
    ("Ba", "Barium",    False, 7.27e-02, 3.47e+00, 7.24e-02, 4.31e-01, 4.05e+00),
    ("Be", "Beryllium", True,  1.35e-03, 2.19e-04, 2.22e-02, 1.39e-05, 2.38e-02),
    ("Bi", "Bismuth",   False, 1.38e+00, 7.43e-01, 6.47e-01, 3.18e-02, 2.80e+00),
    ("Ca", "Calcium",   False, 9.28e-01, 4.65e+00, 2.21e-05, 2.02e-01, 5.78e+00),
    ("Cd", "Cadmium",   True,  2.69e-03, 1.10e-03, 5.75e-04, 6.95e-05, 4.43e-03),
    ("Co", "Cobalt",    True,  4.04e-03, 5.70e-03, 9.72e-04, 5.82e-03, 1.65e-02),
    ("Cr", "Chromium",  True,  6.19e-02, 3.43e-01, 5.25e+00, 1.33e-03, 5.66e+00),
    ("Cu", "Copper",    True,  1.30e+03, 6.87e+01, 8.14e-02, 5.99e+00, 1.37e+03),
    ("Fe", "Iron",      False, 1.58e+00, 4.17e+01, 1.75e-03, 2.20e+00, 4.55e+01),
    ("K",  "Potassium", False, 2.69e-03, 2.87e-02, 8.84e-05, 3.06e-04, 3.18e-02),
    ("Li", "Lithium",   False, 2.69e-03, 4.39e-04, 6.99e-02, 5.56e-05, 7.31e-02),
    ("Mg", "Magnesium", False, 9.83e-02, 1.86e-01, 9.22e-03, 1.78e-02, 3.11e-01),
    ("Mn", "Manganese", False, 8.62e-02, 7.00e-02, 4.40e-03, 7.57e-01, 9.18e-01),
    ("Na", "Sodium",    False, 2.49e-01, 3.88e-01, 1.62e-02, 3.73e-02, 6.91e-01),
    ("Ni", "Nickel",    True,  8.55e+00, 2.05e+00, 8.17e-02, 3.76e-01, 1.11e+01),
    ("Pb", "Lead",      True,  1.27e-01, 5.00e-01, 4.71e-03, 2.43e-02, 6.56e-01),
    ("Pd", "Palladium", False, 4.85e-02, 1.49e-01, 9.50e-04, 1.86e-03, 2.00e-01),
    ("Pt", "Platinum",  False, 4.98e-02, 5.49e-03, 8.40e-04, 4.17e-04, 5.65e-02),
    ("Sb", "Antimony",  True,  6.60e-02, 1.73e-02, 9.50e-04, 7.78e-04, 8.50e-02),
    ("Se", "Selenium",  False, 6.06e-02, 3.16e-02, 5.30e-04, 9.31e-04, 9.37e-02),
    ("Si", "Silicon",   False, 0.00e+00, 9.37e+00, 3.70e+00, 3.27e-01, 1.34e+01),
    ("Sn", "Tin",       False, 9.20e+00, 8.50e+00, 2.17e+00, 3.98e-01, 2.03e+01),
    ("Ti", "Titanium",  False, 8.08e-02, 1.21e+00, 6.42e-02, 1.39e-01, 1.49e+00),
    ("Tl", "Thallium",  True,  1.75e-02, 4.17e-03, 5.08e-04, 6.12e-04, 2.28e-02),
    ("V",  "Vanadium",  False, 8.08e-03, 3.29e-03, 2.65e-04, 5.84e-04, 1.22e-02),
    ("Zn", "Zinc",      True,  3.25e-01, 6.69e-01, 2.42e-02, 1.60e-01, 1.18e+00),
    ("Sr", "Strontium", False, 5.39e-03, None,     None,     None,     5.39e-03),
]

# Vendor datasheet peaks for dense (non-sparse) deep learning workloads,
# in FLOPs per second. BF16 is the precision used for training estimates.
_PEAK_THROUGHPUT = {
    "BF16": 3.12e14,
    "FP16": 3.12e14,
    "TF32": 1.56e14,
}

_SOURCE = (
    "ICP-OES elemental analysis of a disassembled Nvidia A100 SXM 40 GB unit; "
    "throughput peaks from the vendor datasheet (dense, no sparsity)."
)


def _document() -> dict:
    elements = []
    for symbol, name, toxic, heatsink, pcb, gpu_chip, pop, declared in _ELEMENTS:
        masses = {}
        for key, value in (("heatsink", heatsink), ("pcb", pcb),
                           ("gpu_chip", gpu_chip), ("pop", pop)):
            if value is not None:
                masses[key] = value
        elements.append({
            "symbol": symbol,
            "name": name,
            "toxic": toxic,
            "masses": masses,
            "declared_total_g": declared,
        })
    return {
        "id": A100_PROFILE_ID,
        "display_name": "Nvidia A100 SXM 40 GB",
        "peak_throughput": dict(_PEAK_THROUGHPUT),
        "elements": elements,
        "source": _SOURCE,
    }


def a100_profile() -> GpuProfile:
    """The embedded A100 profile, validated through the regular loader."""
    return load_profile(_document())
