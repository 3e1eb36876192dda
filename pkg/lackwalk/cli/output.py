import contextlib
import csv
import logging
import sys
from typing import IO, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from lackwalk.experiments.peaks import PeakResult
from lackwalk.experiments.sweeps import HeatmapGrid
from lackwalk.shared.exceptions import OutputError
from lackwalk.shared.trace import EvolutionTrace
from lackwalk.shared.types import EngineName

logger = logging.getLogger(__name__)

TRACE_HEADER = ("t", "p")
HEATMAP_HEADER = ("l1", "l2", "t_star", "p_star", "T", "loopless_T")
KEY_VALUE_HEADER = ("key", "value")


def format_float(value: float) -> str:
    """17 significant digits, enough to read the same double back."""
    return f"{value:.17g}"


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[IO[str]]:
    """The file at `path`, or standard output when `path` is None."""
    if path is None:
        yield sys.stdout
        return
    try:
        handle = open(path, "w", encoding="utf-8", newline="")
    except OSError as error:
        raise OutputError(f"Cannot write {path!r}: {error.strerror}") from None
    with handle:
        yield handle
    logger.info("wrote %s", path)


def _write_rows(path: Optional[str], header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    with open_output(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# region Traces
def write_trace_csv(trace: EvolutionTrace, path: Optional[str] = None) -> None:
    """One `t,p` row per step."""
    rows = [(str(t), format_float(p)) for t, p in enumerate(trace)]
    _write_rows(path, TRACE_HEADER, rows)


def read_trace_csv(path: str, engine: EngineName = "subspace") -> EvolutionTrace:
    """Inverse of `write_trace_csv`."""
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as error:
        raise OutputError(f"Cannot read {path!r}: {error.strerror}") from None
    if not rows or tuple(rows[0]) != TRACE_HEADER:
        raise OutputError(f"{path!r} does not start with the header t,p")
    probs: List[float] = []
    for t, row in enumerate(rows[1:]):
        try:
            step, value = int(row[0]), float(row[1])
        except (IndexError, ValueError):
            raise OutputError(f"{path!r}: malformed row {row!r}") from None
        if step != t:
            raise OutputError(f"{path!r}: expected step {t}, got {step}")
        probs.append(value)
    return EvolutionTrace(np.array(probs), engine)


# region Heatmaps and key/value tables
def heatmap_rows(grid: HeatmapGrid, loopless: PeakResult) -> List[Tuple[str, ...]]:
    """Row-major rows matching HEATMAP_HEADER."""
    return [
        (
            format_float(l1),
            format_float(l2),
            str(cell.t_star),
            format_float(cell.p_star),
            format_float(cell.total_runtime),
            format_float(loopless.total_runtime),
        )
        for l1, l2, cell in grid.iter_cells()
    ]


def write_heatmap_csv(grid: HeatmapGrid, loopless: PeakResult, path: Optional[str] = None) -> None:
    _write_rows(path, HEATMAP_HEADER, heatmap_rows(grid, loopless))


def write_key_values(values: Sequence[Tuple[str, float]], path: Optional[str] = None) -> None:
    _write_rows(path, KEY_VALUE_HEADER, [(key, format_float(value)) for key, value in values])
