"""flops2footprint: AI-training compute budgets to GPU counts and material mass."""

from .compute import (
    EMPIRICAL_MFU_MAX,
    EMPIRICAL_MFU_MIN,
    SECONDS_PER_YEAR,
    GpuRequirement,
    ModelSpec,
    Scenario,
    adjusted_gpus,
    annual_throughput,
    compute_budget,
    lifetime_throughput,
    required_gpus,
    savings,
    scaling_factor,
    spec_from_dict,
    spec_to_dict,
    sweep,
)
from .errors import (
    Flops2FootprintError,
    InputError,
    NotFoundError,
    ProfileValidationError,
)
from .footprint import (
    BenchmarkScore,
    ComparisonReport,
    FleetReport,
    FootprintReport,
    compare,
    estimate,
    fleet_aggregate,
    material_footprint,
)
from .materials import (
    ComponentId,
    ElementRecord,
    GpuProfile,
    element_total,
    load_profile,
    profile_to_dict,
    toxic_mass,
    total_mass,
)
from .registry import (
    DEFAULT_PRECISION,
    DEFAULT_PROFILE_ID,
    builtin_models,
    get_model,
    get_profile,
    gpt4_scenarios,
    list_profiles,
    model_names,
)

__version__ = "1.0.0"

__all__ = [
    "EMPIRICAL_MFU_MAX",
    "EMPIRICAL_MFU_MIN",
    "SECONDS_PER_YEAR",
    "DEFAULT_PRECISION",
    "DEFAULT_PROFILE_ID",
    "BenchmarkScore",
    "ComparisonReport",
    "ComponentId",
    "ElementRecord",
    "FleetReport",
    "Flops2FootprintError",
    "FootprintReport",
    "GpuProfile",
    "GpuRequirement",
    "InputError",
    "ModelSpec",
    "NotFoundError",
    "ProfileValidationError",
    "Scenario",
    "adjusted_gpus",
    "annual_throughput",
    "builtin_models",
    "compare",
    "compute_budget",
    "element_total",
    "estimate",
    "fleet_aggregate",
    "get_model",
    "get_profile",
    "gpt4_scenarios",
    "lifetime_throughput",
    "list_profiles",
    "load_profile",
    "material_footprint",
    "model_names",
    "profile_to_dict",
    "required_gpus",
    "savings",
    "scaling_factor",
    "spec_from_dict",
    "spec_to_dict",
    "sweep",
    "toxic_mass",
    "total_mass",
    "__version__",
]
