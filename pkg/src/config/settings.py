import os
from dataclasses import dataclass, replace, fields
from typing import Mapping, Optional

from arithmetic.errors import SettingsError


# env variable -> settings field
ENV_FIELDS = {
    'MPLAB_EFFORT_CAP_SECONDS': 'effort_cap_seconds',
    'MPLAB_RHO_ITERATIONS': 'rho_iterations',
    'MPLAB_SEGMENT_SIZE': 'segment_size',
    'MPLAB_FACTORIAL_CAP': 'factorial_cap',
    'MPLAB_WORKERS': 'workers',
}


@dataclass(frozen=True)
class ToolkitSettings:
    """Tunable limits shared by every module"""

    effort_cap_seconds: float = 30.0
    rho_iterations: int = 2_000_000
    trial_division_bound: int = 10**6
    segment_size: int = 2**22
    max_segment_size: int = 2**26
    factorial_cap: int = 200
    poly_range_budget: int = 100_000
    workers: int = os.cpu_count() or 1

    def __post_init__(self):
        if self.effort_cap_seconds <= 0:
            raise SettingsError("effort_cap_seconds must be positive")
        if self.segment_size < 1 or self.segment_size > self.max_segment_size:
            raise SettingsError(
                f"segment_size must lie in [1, {self.max_segment_size}], got {self.segment_size}"
            )
        if self.workers < 1:
            raise SettingsError("workers must be at least 1")


def load_settings(env: Optional[Mapping[str, str]] = None) -> ToolkitSettings:
    """
    Build settings from defaults, overridden by MPLAB_* environment variables.

    Parameters:
    - env: mapping to read instead of os.environ (tests pass a dict)
    """
    env = os.environ if env is None else env
    types = {f.name: f.type for f in fields(ToolkitSettings)}
    overrides = {}

    for var, name in ENV_FIELDS.items():
        raw = env.get(var)
        if raw is None or raw.strip() == "":
            continue
        cast = float if types[name] in (float, 'float') else int
        try:
            overrides[name] = cast(raw)
        except ValueError:
            raise SettingsError(f"{var}={raw!r} is not a valid {cast.__name__}") from None

    return ToolkitSettings(**overrides)


def with_overrides(settings: ToolkitSettings, **changes) -> ToolkitSettings:
    """Copy of settings with the non-None changes applied"""
    changes = {k: v for k, v in changes.items() if v is not None}
    return replace(settings, **changes) if changes else settings
