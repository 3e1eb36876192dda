from .engines import (
    DEFAULT_HORIZON_FACTOR,
    analytic_trace,
    default_engine,
    default_horizon,
    trace_for,
)
from .peaks import PeakResult, find_first_peak, parity_envelope
from .sweeps import (
    DEFAULT_GRID_SIZE,
    HeatmapGrid,
    grid_values,
    heatmap,
    loopless_reference,
    peak_for,
    sweep_l1,
    symmetric_weight_scan,
)

__all__ = [
    "DEFAULT_GRID_SIZE",
    "DEFAULT_HORIZON_FACTOR",
    "HeatmapGrid",
    "PeakResult",
    "analytic_trace",
    "default_engine",
    "default_horizon",
    "find_first_peak",
    "grid_values",
    "heatmap",
    "loopless_reference",
    "parity_envelope",
    "peak_for",
    "sweep_l1",
    "symmetric_weight_scan",
    "trace_for",
]
