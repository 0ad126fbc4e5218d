"""Config mixin for the toolkit facade."""

from __future__ import annotations

from typing import Any

from .model import DEFAULT_PROFILE, RunConfig


class WithConfig:
    """A configuration Mixin."""

    config: RunConfig

    def __init__(self, config: RunConfig, **args):
        """Create a configured entity."""
        self.config = config

    @classmethod
    def from_profile(
        cls,
        profile: str = DEFAULT_PROFILE,
        *,
        skip_error: bool = False,
        **overrides: Any,
    ):
        """Create from a stored profile, with explicit settings taking precedence."""
        config = RunConfig.load(profile, skip_error=skip_error)
        return cls(config.with_overrides(**overrides))

    @classmethod
    def from_settings(cls, **settings: Any):
        """Create from explicit settings on top of the defaults."""
        return cls(RunConfig().with_overrides(**settings))
