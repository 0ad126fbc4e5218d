"""Default fixture suites."""

from typing import List, Type

from ..fixtures import RootSumSuite, WorkedExamples
from .base import QReflectPlugin

PLUGINS: List[Type[QReflectPlugin]] = [WorkedExamples, RootSumSuite]
