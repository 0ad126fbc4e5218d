"""Fixtures available for all tests in this package."""

from .fixtures import (
    _fixture_config,
    _fixture_mystic,
    _fixture_plane,
    _fixture_profile_dir,
    _fixture_skew_files,
    _fixture_skew_plane,
    _fixture_skew_square,
    _fixture_swap,
    _fixture_toolkit,
)

__all__ = [
    "_fixture_config",
    "_fixture_toolkit",
    "_fixture_plane",
    "_fixture_skew_plane",
    "_fixture_skew_square",
    "_fixture_mystic",
    "_fixture_swap",
    "_fixture_profile_dir",
    "_fixture_skew_files",
]
