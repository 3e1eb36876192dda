from importlib.metadata import PackageNotFoundError, version

from . import analytics, cli, experiments, full_walk, graph, shared, subspace

try:
    __version__ = version("lackwalk")
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"

__all__ = [
    "__version__",
    "analytics",
    "cli",
    "experiments",
    "full_walk",
    "graph",
    "shared",
    "subspace",
]
