"""Release version of qreflect-kit."""

import importlib.metadata

__version__ = importlib.metadata.version("qreflect-kit")
