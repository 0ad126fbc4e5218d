"""Client mixin for plugins."""

from __future__ import annotations

import sys
import warnings
from importlib.metadata import entry_points
from typing import Dict, Type

from ..config import RunConfig
from .base import FixtureSuite, PluginAccess, QReflectPlugin

ENTRY_POINT_GROUP = "dynamic"
ENTRY_POINT_NAME = "qreflect_kit_plugins"


class WithFixtureSuites:
    """Loader of fixture suite plugins."""

    suites: PluginAccess[FixtureSuite]
    _suites: Dict[str, FixtureSuite]

    def __init__(self, config: RunConfig):
        """Register the built-in suites and every suite exposed by entry points."""
        self._plugin_config = config
        self._suites = {}
        self.suites = PluginAccess[FixtureSuite](self._suites, FixtureSuite)
        self._load_plugins()

    def _load_plugins(self):
        from .loader import PLUGINS

        for plugin_class in PLUGINS:
            self.register(plugin_class)
        if sys.version_info >= (3, 10):
            plugin_entry_points = entry_points(
                group=ENTRY_POINT_GROUP, name=ENTRY_POINT_NAME
            )
        else:
            plugin_entry_points = [
                ep
                for ep in entry_points().get(ENTRY_POINT_GROUP, [])
                if ep.name == ENTRY_POINT_NAME
            ]
        for ep in plugin_entry_points:
            for plugin_class in ep.load():
                if plugin_class not in PLUGINS:
                    self.register(plugin_class)

    def register(self, plugin_class: Type[QReflectPlugin]) -> QReflectPlugin | None:
        """Register and instantiate plugin class."""
        if isinstance(plugin_class, type) and issubclass(plugin_class, FixtureSuite):
            suite = plugin_class(self._plugin_config)
            self._suites[suite.name] = suite
            return suite
        warnings.warn(message=f"Invalid plug class: {plugin_class}", stacklevel=1)
        return None

    def __getattr__(self, name: str):
        """Get plugin by name."""
        if name.startswith("_"):
            raise AttributeError(name)
        if name in self._suites:
            return self._suites[name]
        raise AttributeError(
            f"'{self.__class__.__name__}' object has no attribute '{name}'"
        )
