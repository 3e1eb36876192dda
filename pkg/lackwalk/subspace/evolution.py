import logging

import numpy as np

from lackwalk.shared.trace import EvolutionTrace
from lackwalk.shared.types import InitialState, RealVector
from lackwalk.subspace.models import SubspaceModel

logger = logging.getLogger(__name__)


def initial_coords(model: SubspaceModel, init: InitialState) -> RealVector:
    """Writable copy of the starting vector for `init`."""
    return np.array(model.coords(init), dtype=np.float64)


def evolve_subspace(
    model: SubspaceModel,
    init: InitialState,
    steps: int,
    debug: bool = False,
) -> EvolutionTrace:
    """
    Success probability after 0..steps applications of the reduced operator.

    Args:
        model (SubspaceModel): The reduced search operator.
        init (InitialState): "uniform" for |s>, "stationary" for |sigma>.
        steps (int): Number of steps.
        debug (bool): Log p(t) at every step.

    Returns:
        EvolutionTrace: steps + 1 probabilities, engine "subspace".

    Example:
        >>> model = build_model(build_instance(1000, 800, 1.2, 0.0, 3, 0))
        >>> trace = evolve_subspace(model, "stationary", 60)
        >>> trace.horizon, trace.engine
        (60, 'subspace')
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    marked = list(model.marked_indices)
    coords = initial_coords(model, init)
    probs = np.empty(steps + 1, dtype=np.float64)
    for t in range(steps + 1):
        if t > 0:
            coords = model.matrix @ coords
        probs[t] = float(np.sum(coords[marked] ** 2))
        if debug:
            logger.debug("subspace engine t=%d p=%.17g", t, probs[t])
    return EvolutionTrace(probs, "subspace")
