"""Toolkit configuration."""

from .model import DEFAULT_PROFILE, OutputFormat, RunConfig

__all__ = [
    "DEFAULT_PROFILE",
    "OutputFormat",
    "RunConfig",
]
