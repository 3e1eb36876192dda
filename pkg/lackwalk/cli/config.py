import argparse
import logging
import os
from dataclasses import dataclass, fields
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, Tuple

from lackwalk.experiments.engines import default_engine
from lackwalk.experiments.peaks import MIN_PEAK_TRACE
from lackwalk.experiments.sweeps import DEFAULT_GRID_SIZE
from lackwalk.graph.instance import (
    BipartiteInstance,
    arc_count,
    build_instance,
    is_both_sets_case,
    is_symmetric_case,
)
from lackwalk.shared.exceptions import ConfigError
from lackwalk.shared.types import (
    ENGINE_NAMES,
    HEATMAP_METRICS,
    INITIAL_STATES,
    EngineName,
    HeatmapMetric,
    InitialState,
)

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
THREADS_ENV = "LACKWALK_THREADS"
DEFAULT_ARC_CAP = 5_000_000

GridRange = Tuple[float, float, int]
DEFAULT_RANGE: GridRange = (0.0, 10.0, DEFAULT_GRID_SIZE)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one invocation needs, after defaults, config file and flags
    have been merged.
    """

    command: str
    n1: int = 1000
    n2: int = 800
    l1: float = 0.0
    l2: float = 0.0
    k1: int = 1
    k2: int = 0
    init: InitialState = "uniform"
    engine: Optional[EngineName] = None
    steps: Optional[int] = None
    out: Optional[str] = None
    threads: int = 1
    force: bool = False
    arc_cap: int = DEFAULT_ARC_CAP
    l1_range: GridRange = DEFAULT_RANGE
    l2_range: GridRange = DEFAULT_RANGE
    metric: HeatmapMetric = "pstar"
    log_level: str = "WARNING"

    def instance(self) -> BipartiteInstance:
        return build_instance(self.n1, self.n2, self.l1, self.l2, self.k1, self.k2)

    @property
    def resolved_engine(self) -> EngineName:
        return default_engine(self.instance()) if self.engine is None else self.engine


# region Value parsing
def parse_range(text: str) -> GridRange:
    """
    "lo:hi:n" -> (lo, hi, n).

    Example:
        >>> parse_range("0:10:41")
        (0.0, 10.0, 41)
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"Range must look like lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"Range must look like lo:hi:n, got {text!r}") from None
    if n < 1 or (n > 1 and hi < lo):
        raise ConfigError(f"Empty range {text!r}")
    return lo, hi, n


def parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"Expected a boolean, got {text!r}")


def _choice(options: Sequence[str]) -> Callable[[str], str]:
    def parse(text: str) -> str:
        if text not in options:
            raise ConfigError(f"Expected one of {', '.join(options)}, got {text!r}")
        return text

    return parse


def _number(kind: Callable[[str], Any]) -> Callable[[str], Any]:
    def parse(text: str) -> Any:
        try:
            return kind(text)
        except ValueError:
            raise ConfigError(f"Expected a {kind.__name__}, got {text!r}") from None

    return parse


CONVERTERS: Dict[str, Callable[[str], Any]] = {
    "n1": _number(int),
    "n2": _number(int),
    "l1": _number(float),
    "l2": _number(float),
    "k1": _number(int),
    "k2": _number(int),
    "init": _choice(INITIAL_STATES),
    "engine": _choice(ENGINE_NAMES),
    "steps": _number(int),
    "out": str,
    "threads": _number(int),
    "force": parse_bool,
    "arc_cap": _number(int),
    "l1_range": parse_range,
    "l2_range": parse_range,
    "metric": _choice(HEATMAP_METRICS),
    "log_level": _choice(LOG_LEVELS),
}


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Parses flat key=value lines. Blank lines and lines starting with # are
    skipped; dashes in keys count as underscores.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as error:
        raise ConfigError(f"Cannot read config file {path!r}: {error.strerror}") from None
    values: Dict[str, Any] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep:
            raise ConfigError(f"{path}:{number}: expected key=value, got {line!r}")
        if key not in CONVERTERS:
            raise ConfigError(f"{path}:{number}: unknown key {key!r}")
        values[key] = CONVERTERS[key](value.strip())
    return values


# region Parser
class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise ConfigError(message)


def _argparse_type(key: str) -> Callable[[str], Any]:
    convert = CONVERTERS[key]

    def parse(text: str) -> Any:
        try:
            return convert(text)
        except ConfigError as error:
            raise argparse.ArgumentTypeError(str(error)) from None

    parse.__name__ = key
    return parse


def build_parser() -> argparse.ArgumentParser:
    """Subcommands simulate, analytic, heatmap and verify sharing one flag set."""
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    for key in ("n1", "n2", "l1", "l2", "k1", "k2", "steps", "threads", "arc_cap"):
        common.add_argument(f"--{key.replace('_', '-')}", dest=key, type=_argparse_type(key))
    common.add_argument("--init", choices=INITIAL_STATES)
    common.add_argument("--engine", choices=ENGINE_NAMES)
    common.add_argument("--out", help="Output CSV path, standard output when omitted")
    common.add_argument("--force", action="store_true", help="Run the full engine past --arc-cap")
    common.add_argument("--config", help="Flat key=value file; flags override it")
    common.add_argument("--log-level", dest="log_level", choices=LOG_LEVELS)
    parser = _Parser(prog="lackwalk", description="Lackadaisical quantum search on complete bipartite graphs")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("simulate", parents=[common], help="Success probability trace")
    commands.add_parser("analytic", parents=[common], help="Closed-form predictions")
    heatmap = commands.add_parser("heatmap", parents=[common], help="Peak results over an (l1, l2) grid")
    heatmap.add_argument("--l1-range", dest="l1_range", type=_argparse_type("l1_range"))
    heatmap.add_argument("--l2-range", dest="l2_range", type=_argparse_type("l2_range"))
    heatmap.add_argument("--metric", choices=HEATMAP_METRICS)
    commands.add_parser("verify", parents=[common], help="Run the invariant suites")
    return parser


def default_threads() -> int:
    """LACKWALK_THREADS if set, else the CPU count."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def build_config(argv: Optional[List[str]] = None) -> RunConfig:
    """
    Merges defaults, the optional --config file and the flags, then checks
    the combination.

    Raises:
        ConfigError: On bad flags, bad file entries or a refused engine.
        InstanceError: When the instance fields are invalid.
    """
    args = vars(build_parser().parse_args(argv))
    values: Dict[str, Any] = {"threads": default_threads()}
    path = args.pop("config", None)
    if path is not None:
        values.update(read_config_file(path))
    values.update(args)
    known = {f.name for f in fields(RunConfig)}
    config = RunConfig(**{key: value for key, value in values.items() if key in known})
    validate_config(config)
    return config


def validate_config(config: RunConfig) -> None:
    if config.steps is not None and config.steps < 0:
        raise ConfigError(f"--steps must be >= 0, got {config.steps}")
    if config.command == "heatmap" and config.steps is not None and config.steps < MIN_PEAK_TRACE:
        raise ConfigError(f"--steps must be >= {MIN_PEAK_TRACE} for a heatmap, got {config.steps}")
    if config.threads < 1:
        raise ConfigError(f"--threads must be >= 1, got {config.threads}")
    if config.command == "verify":
        return
    inst = config.instance()
    engine = config.resolved_engine
    if engine == "analytic" and is_both_sets_case(inst) and not is_symmetric_case(inst):
        raise ConfigError(
            "No closed form for marked vertices in both sets unless n1=n2, k1=k2 and l1=l2; "
            "use the subspace engine"
        )
    if engine == "full" and arc_count(inst) > config.arc_cap:
        if not config.force:
            raise ConfigError(
                f"Full engine needs {arc_count(inst)} arcs, above --arc-cap={config.arc_cap}; "
                "pass --force to run it anyway"
            )
        logger.warning("Forcing the full engine on %d arcs", arc_count(inst))
