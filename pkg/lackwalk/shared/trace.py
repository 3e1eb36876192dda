from typing import Iterator

import numpy as np

from lackwalk.shared.exceptions import VerificationError
from lackwalk.shared.types import EngineName, RealVector

PROBABILITY_SLACK = 1e-12


class EvolutionTrace:
    """
    Success probabilities p(0), p(1), ..., p(t_max) of one search run.

    Args:
        probs (RealVector): One entry per integer time step, starting at t = 0.
        engine (EngineName): Which engine produced the values.

    Example:
        >>> trace = EvolutionTrace(np.array([0.0, 0.25, 0.5]), "subspace")
        >>> trace.horizon, trace.max()
        (2, 0.5)
    """

    __slots__ = ("probs", "engine")

    probs: RealVector
    engine: EngineName

    def __init__(self, probs: RealVector, engine: EngineName) -> None:
        values = np.array(probs, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise VerificationError("A trace needs at least the t=0 entry")
        if np.any(values > 1.0 + PROBABILITY_SLACK) or np.any(
            values < -PROBABILITY_SLACK
        ):
            worst = float(values[np.argmax(np.abs(values - 0.5))])
            raise VerificationError(f"Success probability {worst!r} outside [0, 1]")
        values.setflags(write=False)
        self.probs = values
        self.engine = engine

    def __len__(self) -> int:
        return int(self.probs.size)

    def __iter__(self) -> Iterator[float]:
        return (float(p) for p in self.probs)

    def __getitem__(self, t: int) -> float:
        return float(self.probs[t])

    @property
    def horizon(self) -> int:
        """Last time step recorded."""
        return len(self) - 1

    def max(self) -> float:
        return float(np.max(self.probs))

    def argmax(self) -> int:
        """First time step reaching the maximum."""
        return int(np.argmax(self.probs))

    def max_deviation(self, other: "EvolutionTrace") -> float:
        """Largest pointwise |p(t) - p'(t)| over the common horizon."""
        size = min(len(self), len(other))
        return float(np.max(np.abs(self.probs[:size] - other.probs[:size])))
