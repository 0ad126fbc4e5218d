"""Run configuration and its stored profiles."""

from __future__ import annotations

import json
import logging
import os
import re
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from appdirs import user_config_dir
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from typing_extensions import Self

from ..exceptions import ConfigError

log = logging.getLogger(__name__)

DEFAULT_PROFILE = "_default_"
CONFIG_DIR_NAME = "qreflect"

OutputFormat = Literal["text", "json"]


class RunConfig(BaseModel):
    """Cutoffs, caps and output settings shared by every command."""

    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    degree_cutoff: int = Field(12, ge=4)
    order_cap: int = Field(10_000, gt=0)
    output_format: OutputFormat = "text"
    conductor_overflow_limit: int = Field(2520, gt=0)
    normality_cutoff: int = Field(8, ge=2)
    rootsum_candidate_limit: int = Field(500_000, gt=0)
    order_bound: Optional[int] = Field(None, gt=0)
    profile: str = Field(DEFAULT_PROFILE, exclude=True)

    @model_validator(mode="after")
    def _normality_within_cutoff(self) -> Self:
        if self.normality_cutoff > self.degree_cutoff:
            raise ValueError(
                f"normality_cutoff {self.normality_cutoff} exceeds "
                f"degree_cutoff {self.degree_cutoff}"
            )
        return self

    def with_overrides(self, **settings: Any) -> RunConfig:
        """Copy with the given settings replaced; None values are ignored."""
        updates = {k: v for k, v in settings.items() if v is not None}
        if not updates:
            return self
        return RunConfig.from_dict(
            {**self.to_dict(), **updates}, profile=self.profile
        )

    # profile persistency methods
    @classmethod
    def config_file_path(cls, profile: str = DEFAULT_PROFILE) -> str:
        """Compute the default OS path used to store a profile."""
        return os.path.join(
            user_config_dir(CONFIG_DIR_NAME), f".profile.{profile}.json"
        )

    @classmethod
    def load(
        cls, profile: str | None = DEFAULT_PROFILE, *, skip_error: bool = False
    ) -> RunConfig:
        """Load a stored profile.

        With ``skip_error`` a missing or invalid profile gives the defaults.
        """
        profile = DEFAULT_PROFILE if profile is None else profile
        try:
            with open(cls.config_file_path(profile), encoding="utf-8") as config_file:
                config_json = json.load(config_file)
            return cls.from_dict(config_json, profile=profile)
        except (FileNotFoundError, ValueError, ConfigError) as exc:
            msg = f"Config profile '{profile}' not found or invalid."
            if skip_error:
                log.warning(msg)
                return cls(profile=profile)
            raise ConfigError(msg) from exc

    @classmethod
    def from_dict(
        cls, config_json: Mapping[str, Any], *, profile: str = DEFAULT_PROFILE
    ) -> RunConfig:
        """Create a RunConfig from a dict representation."""
        try:
            return cls.model_validate({**config_json, "profile": profile})
        except ValidationError as exc:
            msg = f"invalid settings for profile '{profile}': {exc}"
            raise ConfigError(msg) from exc

    def to_dict(self) -> Dict[str, Any]:
        """Get the settings of this configuration, without the profile name."""
        return self.model_dump()

    def save(self) -> str:
        """Save the configuration under its profile name.

        Returns the save location.
        """
        config_path = Path(self.config_file_path(self.profile))
        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, mode="w", encoding="utf-8") as config_file:
            json.dump(self.to_dict(), config_file, indent=2)
            log.info("wrote qreflect configuration: %s", config_path)
        return str(config_path)

    @classmethod
    def delete(cls, profile: str = DEFAULT_PROFILE) -> str:
        """Delete a stored profile.

        Returns the deleted location.
        """
        config_path = Path(cls.config_file_path(profile))
        if config_path.exists():
            config_path.unlink()
            log.warning("qreflect configuration removed: %s", config_path)
        else:
            log.warning("qreflect configuration not found: %s", config_path)
        return str(config_path)

    @classmethod
    def list_profiles(cls) -> Dict[str, str]:
        """List stored profiles with their locations."""
        config_dir = Path(cls.config_file_path()).parent
        if not config_dir.is_dir():
            return {}
        return {
            profile_match[1]: str(config_file)
            for config_file in sorted(config_dir.iterdir())
            for profile_match in [re.match(r"\.profile\.(.*)\.json", config_file.name)]
            if profile_match
        }

    def __str__(self):
        """Show the profile and settings as a string."""
        return json.dumps({"profile": self.profile, **self.to_dict()})
