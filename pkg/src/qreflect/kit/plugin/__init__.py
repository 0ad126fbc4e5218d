"""Toolkit plugins."""

from .base import (
    Fixture,
    FixtureOutcome,
    FixtureSuite,
    PluginAccess,
    QReflectPlugin,
)

__all__ = [
    "QReflectPlugin",
    "Fixture",
    "FixtureOutcome",
    "FixtureSuite",
    "PluginAccess",
]
