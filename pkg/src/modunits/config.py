"""Run-time settings shared by the library and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass

SLACK_ENV = "MODUNITS_PRECISION_SLACK"
DEFAULT_SLACK = 2


def precision_slack() -> int:
    raw = os.environ.get(SLACK_ENV)
    if raw is None or raw == "":
        return DEFAULT_SLACK
    value = int(raw)
    if value < 0:
        raise ValueError(f"{SLACK_ENV} must be >= 0, got {value}")
    return value


@dataclass(frozen=True)
class Config:
    precision_slack: int = DEFAULT_SLACK
    output_format: str = "text"
    parallelism: int = 1

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.precision_slack < 0:
            raise ValueError("precision slack must be >= 0")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        values = {"precision_slack": precision_slack()}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
