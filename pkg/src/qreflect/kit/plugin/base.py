"""Base classes for toolkit plugins."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Callable, Generic, List, Tuple, Type, TypeVar, Union

from ..config import RunConfig
from ..exceptions import QReflectError

log = logging.getLogger(__name__)

P = TypeVar("P", bound="QReflectPlugin")
PI = TypeVar("PI", bound="QReflectPlugin")

# passed, detail and optionally the divergences from a reference list
CheckResult = Union[Tuple[bool, str], Tuple[bool, str, Tuple[str, ...]]]


class QReflectPlugin:
    """Plugin for the toolkit."""

    name: str = "__NO_NAME__"
    title: str = "__NO_TITLE__"
    description: str | None = None

    config: RunConfig

    def __init__(self, config: RunConfig):
        """Create a toolkit plugin."""
        self.config = config

    def __str__(self):
        """Get a plugin description."""
        return f"{self.name}: {self.title}"

    def __repr__(self):
        """Get a plugin representation."""
        return f"<{self.__class__.__name__}({self.name})>"


@dataclass(frozen=True)
class Fixture:
    """A named check and the claim it verifies."""

    name: str
    claim: str
    run: Callable[[], CheckResult]


@dataclass(frozen=True)
class FixtureOutcome:
    """Result of running one fixture."""

    name: str
    claim: str
    passed: bool
    detail: str = ""
    divergences: Tuple[str, ...] = ()

    def __str__(self) -> str:
        """Render as ``PASS name: claim``."""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.claim}"


class FixtureSuite(QReflectPlugin):
    """A collection of fixtures with expected values."""

    def checks(self) -> Iterable[Fixture]:
        """Fixtures of this suite, in run order."""
        raise NotImplementedError

    def run(self) -> List[FixtureOutcome]:
        """Run every fixture; toolkit errors count as failures."""
        outcomes = []
        for fixture in self.checks():
            divergences: Tuple[str, ...] = ()
            try:
                passed, detail, *extra = fixture.run()
            except QReflectError as exc:
                passed, detail, extra = False, f"{exc.__class__.__name__}: {exc}", []
            if extra:
                divergences = tuple(extra[0])
                for d in divergences:
                    log.warning("%s/%s diverges: %s", self.name, fixture.name, d)
            outcome = FixtureOutcome(
                fixture.name, fixture.claim, passed, detail, divergences
            )
            log.info("%s/%s: %s", self.name, fixture.name, "PASS" if passed else "FAIL")
            outcomes.append(outcome)
        return outcomes


class PluginAccess(Mapping[str, P], Generic[P]):
    """A lookup API for plugins."""

    base_class: Type[P]

    def __init__(self, items: Mapping[str, P], base_class: Type[P]):
        """Create accessor for toolkit plugins."""
        self._items = items
        self.base_class = base_class

    def __getitem__(self, __key: str) -> P:
        """Get a plugin by key."""
        return self._items.__getitem__(__key)

    def __iter__(self) -> Iterator[str]:
        """Iterate plugin keys."""
        return self._items.__iter__()

    def __len__(self) -> int:
        """Count registered plugins."""
        return self._items.__len__()

    def iter(self, item_class: Type[PI], name: str | None = None) -> Iterator[PI]:
        """Iterate over the plugins that satisfy the requirements."""
        if name:
            plug = self._items.get(name, None)
            if isinstance(plug, item_class):
                yield plug
            return
        for plug in self._items.values():
            if isinstance(plug, item_class):
                yield plug

    def select(self, item_class: Type[PI], name: str | None = None) -> PI | None:
        """Select the first plugin that satisfies the class and name requirements."""
        return next(self.iter(item_class, name), None)

    def require(self, item_class: Type[PI], name: str | None = None) -> PI:
        """Get the plugin for the given class or raise an AttributeError."""
        item = self.select(item_class, name)
        if item is None:
            info = f"{item_class.__name__} '{name}'" if name else item_class.__name__
            raise AttributeError(f"{info} is not available.")
        return item

    def __getattr__(self, name: str) -> P:
        """Get a plugin by name."""
        return self.require(self.base_class, name)

    def __repr__(self):
        """Get string representation."""
        return repr(self._items)
