import logging
import math
from dataclasses import dataclass

import numpy as np

from lackwalk.shared.trace import EvolutionTrace
from lackwalk.shared.types import RealVector

logger = logging.getLogger(__name__)

MIN_PEAK_TRACE = 3
PEAK_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PeakResult:
    """
    First maximum of a success-probability trace.

    Args:
        t_star (int): Step index of the peak.
        p_star (float): Trace value at `t_star`.
        total_runtime (float): t_star / p_star, infinite when p_star is 0.
    """

    t_star: int
    p_star: float
    total_runtime: float

    @classmethod
    def at(cls, trace: EvolutionTrace, t: int) -> "PeakResult":
        p = trace[t]
        runtime = t / p if p > 0 else math.inf
        return cls(t, p, runtime)


def parity_envelope(trace: EvolutionTrace) -> RealVector:
    """q(t) = max(p(t), p(t + 1)), one entry shorter than the trace."""
    probs = trace.probs
    return np.maximum(probs[:-1], probs[1:])


def find_first_peak(trace: EvolutionTrace, tolerance: float = PEAK_TOLERANCE) -> PeakResult:
    """
    Locates the first maximum of p(t).

    Even/odd alternation is smoothed out by taking the parity envelope q
    first. The peak is the first t with q(t - 1) < q(t), q(t) > q(0) and the
    next value of q that differs from q(t) being lower; runs of equal q count
    as one point. The reported step is the first raw maximum over that run.
    Without such a t the global argmax is returned.

    Values closer than `tolerance` are treated as equal, so rounding noise
    between engines never moves the reported step.

    Args:
        trace (EvolutionTrace): At least three steps.
        tolerance (float): Absolute gap below which two values tie.

    Returns:
        PeakResult: Peak step, height and t*/p*.

    Example:
        >>> trace = EvolutionTrace(np.array([0.0, 0.3, 0.2, 0.6, 0.5, 0.4, 0.1]), "full")
        >>> find_first_peak(trace).t_star
        3
    """
    if len(trace) < MIN_PEAK_TRACE:
        raise ValueError(f"Peak detection needs at least {MIN_PEAK_TRACE} steps, got {len(trace)}")
    if trace.max() <= 0:
        return PeakResult(0, 0.0, math.inf)
    q = parity_envelope(trace)
    for t in range(1, len(q) - 1):
        level = q[t] - tolerance
        if not (q[t - 1] < level and q[0] < level):
            continue
        end = t + 1
        while end < len(q) and abs(q[end] - q[t]) <= tolerance:
            end += 1
        if end < len(q) and q[end] < level:
            return PeakResult.at(trace, _first_near_max(trace.probs, t, end + 1, tolerance))
    logger.warning(
        "No interior maximum within %d steps, using the global argmax", trace.horizon
    )
    return PeakResult.at(trace, _first_near_max(trace.probs, 0, len(trace), tolerance))


def _first_near_max(probs: RealVector, start: int, stop: int, tolerance: float) -> int:
    window = probs[start:stop]
    return start + int(np.argmax(window >= window.max() - tolerance))
