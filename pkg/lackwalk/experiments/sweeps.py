import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from lackwalk.analytics.symmetric import symmetric_runtime
from lackwalk.experiments.engines import default_horizon, trace_for
from lackwalk.experiments.peaks import MIN_PEAK_TRACE, PeakResult, find_first_peak
from lackwalk.graph.instance import BipartiteInstance
from lackwalk.shared.exceptions import VerificationError
from lackwalk.shared.types import EngineName, HeatmapMetric, InitialState, RealMatrix, RealVector

logger = logging.getLogger(__name__)

DEFAULT_GRID_SIZE = 41


# region HeatmapGrid
@dataclass(frozen=True)
class HeatmapGrid:
    """
    Peak results over an (l1, l2) grid. `cells[i][j]` belongs to
    (l1_values[i], l2_values[j]).
    """

    l1_values: RealVector
    l2_values: RealVector
    cells: Tuple[Tuple[PeakResult, ...], ...]
    metric: HeatmapMetric

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.l1_values) or any(
            len(row) != len(self.l2_values) for row in self.cells
        ):
            raise VerificationError(
                f"Heatmap cells do not match a {len(self.l1_values)}x{len(self.l2_values)} grid"
            )

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.l1_values), len(self.l2_values)

    def values(self, metric: Optional[HeatmapMetric] = None) -> RealMatrix:
        """p* or T for every cell, defaulting to the grid's own metric."""
        chosen = self.metric if metric is None else metric
        if chosen == "pstar":
            return np.array([[cell.p_star for cell in row] for row in self.cells])
        return np.array([[cell.total_runtime for cell in row] for row in self.cells])

    def iter_cells(self) -> Iterator[Tuple[float, float, PeakResult]]:
        """(l1, l2, peak) in row-major order."""
        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                yield float(self.l1_values[i]), float(self.l2_values[j]), cell


# region Helpers
def grid_values(lo: float, hi: float, n: int) -> RealVector:
    """
    n evenly spaced values from lo to hi, both included.

    Example:
        >>> grid_values(0.0, 10.0, 5).tolist()
        [0.0, 2.5, 5.0, 7.5, 10.0]
    """
    if n < 1:
        raise ValueError(f"A grid needs at least one point, got n={n}")
    if n > 1 and hi < lo:
        raise ValueError(f"Empty range {lo}:{hi}")
    return np.linspace(lo, hi, n)


def _check_horizon(horizon: int) -> None:
    if horizon < MIN_PEAK_TRACE:
        raise ValueError(f"horizon must be >= {MIN_PEAK_TRACE}, got {horizon}")


def peak_for(
    inst: BipartiteInstance,
    init: InitialState,
    horizon: Optional[int] = None,
    engine: Optional[EngineName] = None,
) -> PeakResult:
    """First peak of a single run."""
    return find_first_peak(trace_for(inst, init, horizon, engine))


# region Sweeps
def sweep_l1(
    template: BipartiteInstance,
    init: InitialState,
    l1_values: Sequence[float],
    horizon: Optional[int] = None,
    engine: Optional[EngineName] = None,
) -> List[PeakResult]:
    """
    First peak for each X-loop weight, everything else taken from `template`.

    Args:
        template (BipartiteInstance): Sizes, marks and the Y-loop weight.
        init (InitialState): Starting state.
        l1_values (Sequence[float]): Weights to try, in output order.
        horizon (Optional[int]): Steps per run, at least 3.
        engine (Optional[EngineName]): Engine for every run.

    Returns:
        List[PeakResult]: One result per weight.
    """
    steps = default_horizon(template) if horizon is None else horizon
    _check_horizon(steps)
    logger.info("l1 sweep over %d values, %d steps each", len(l1_values), steps)
    results = [
        peak_for(template.with_weights(l1, template.l2), init, steps, engine)
        for l1 in l1_values
    ]
    logger.info("l1 sweep done")
    return results


def loopless_reference(
    inst: BipartiteInstance,
    init: InitialState,
    horizon: Optional[int] = None,
    engine: Optional[EngineName] = None,
) -> PeakResult:
    """First peak of the same search with l1 = l2 = 0."""
    return peak_for(inst.with_weights(0.0, 0.0), init, horizon, engine)


def heatmap(
    template: BipartiteInstance,
    init: InitialState,
    l1_values: Sequence[float],
    l2_values: Sequence[float],
    metric: HeatmapMetric = "pstar",
    horizon: Optional[int] = None,
    engine: Optional[EngineName] = None,
    threads: Optional[int] = None,
) -> HeatmapGrid:
    """
    First peak at every (l1, l2) pair of the grid.

    Cells are independent runs spread over a thread pool; the result does
    not depend on the number of workers or on completion order.

    Args:
        template (BipartiteInstance): Sizes and marks. Its weights are ignored.
        init (InitialState): Starting state.
        l1_values (Sequence[float]): Row coordinates.
        l2_values (Sequence[float]): Column coordinates.
        metric (HeatmapMetric): Quantity `HeatmapGrid.values` reports.
        horizon (Optional[int]): Steps per run, at least 3.
        engine (Optional[EngineName]): Engine for every cell.
        threads (Optional[int]): Worker count, defaults to the CPU count.

    Returns:
        HeatmapGrid: len(l1_values) x len(l2_values) cells.
    """
    if len(l1_values) == 0 or len(l2_values) == 0:
        raise ValueError("Heatmap ranges must not be empty")
    steps = default_horizon(template) if horizon is None else horizon
    _check_horizon(steps)
    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError(f"threads must be >= 1, got {workers}")
    rows, cols = len(l1_values), len(l2_values)
    logger.info("heatmap %dx%d, %d steps per cell, %d workers", rows, cols, steps, workers)
    found: Dict[Tuple[int, int], PeakResult] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {
            pool.submit(
                peak_for, template.with_weights(l1, l2), init, steps, engine
            ): (i, j)
            for i, l1 in enumerate(l1_values)
            for j, l2 in enumerate(l2_values)
        }
        for future in as_completed(futures):
            found[futures[future]] = future.result()
    logger.info("heatmap done")
    return HeatmapGrid(
        l1_values=np.array(l1_values, dtype=np.float64),
        l2_values=np.array(l2_values, dtype=np.float64),
        cells=tuple(tuple(found[i, j] for j in range(cols)) for i in range(rows)),
        metric=metric,
    )


def symmetric_weight_scan(n: float, k: float, l_values: Sequence[float]) -> Tuple[float, float]:
    """(l, T) minimizing the closed-form total runtime over `l_values`."""
    if len(l_values) == 0:
        raise ValueError("No weights to scan")
    runtimes = [symmetric_runtime(n, k, l) for l in l_values]
    best = int(np.argmin(runtimes))
    return float(l_values[best]), runtimes[best]
