import logging
import math
from typing import Optional

import numpy as np

from lackwalk.analytics.one_set import one_set_p_of_t
from lackwalk.analytics.symmetric import symmetric_p_of_t, symmetric_parameters
from lackwalk.full_walk.walk import evolve, initial_stationary, initial_uniform
from lackwalk.graph.instance import (
    BipartiteInstance,
    is_one_set_case,
    is_symmetric_case,
    swap_sets,
)
from lackwalk.shared.exceptions import FormulaError, ModelError
from lackwalk.shared.trace import EvolutionTrace
from lackwalk.shared.types import EngineName, InitialState
from lackwalk.subspace.evolution import evolve_subspace
from lackwalk.subspace.models import build_model

logger = logging.getLogger(__name__)

DEFAULT_HORIZON_FACTOR = 10


def default_horizon(inst: BipartiteInstance) -> int:
    """10·ceil(sqrt(n1 + n2)) steps."""
    return DEFAULT_HORIZON_FACTOR * math.ceil(math.sqrt(inst.n_vertices))


def default_engine(inst: BipartiteInstance) -> EngineName:
    """The subspace engine whenever a reduction exists, the full walk otherwise."""
    try:
        build_model(inst)
    except ModelError:
        return "full"
    return "subspace"


def analytic_trace(inst: BipartiteInstance, init: InitialState, steps: int) -> EvolutionTrace:
    """
    Closed-form p(t) sampled at t = 0..steps, clipped to [0, 1].

    Raises:
        FormulaError: For marked vertices in both sets outside the symmetric case.
    """
    times = range(steps + 1)
    if is_symmetric_case(inst):
        n, k, l = symmetric_parameters(inst)
        values = [symmetric_p_of_t(n, k, l, t) for t in times]
    elif is_one_set_case(inst):
        values = [one_set_p_of_t(inst, init, t) for t in times]
    elif inst.k1 == 0 and inst.k2 >= 1:
        relabeled = swap_sets(inst)
        values = [one_set_p_of_t(relabeled, init, t) for t in times]
    else:
        raise FormulaError(
            f"No closed form for k1={inst.k1}, k2={inst.k2} with unequal sets; "
            "use the subspace engine"
        )
    return EvolutionTrace(np.clip(values, 0.0, 1.0), "analytic")


def trace_for(
    inst: BipartiteInstance,
    init: InitialState,
    horizon: Optional[int] = None,
    engine: Optional[EngineName] = None,
) -> EvolutionTrace:
    """
    Success-probability trace of one run, from whichever engine is asked for.

    Args:
        inst (BipartiteInstance): Instance to search.
        init (InitialState): Starting state.
        horizon (Optional[int]): Number of steps. Defaults to `default_horizon`.
        engine (Optional[EngineName]): Defaults to `default_engine`.

    Returns:
        EvolutionTrace: horizon + 1 values.

    Example:
        >>> inst = build_instance(1000, 800, 1.2, 0.0, 3, 0)
        >>> trace = trace_for(inst, "uniform")
        >>> trace.horizon, trace.engine
        (430, 'subspace')
    """
    steps = default_horizon(inst) if horizon is None else horizon
    chosen = default_engine(inst) if engine is None else engine
    if chosen == "full":
        start = initial_uniform(inst) if init == "uniform" else initial_stationary(inst)
        return evolve(start, steps)
    if chosen == "subspace":
        return evolve_subspace(build_model(inst), init, steps)
    return analytic_trace(inst, init, steps)
