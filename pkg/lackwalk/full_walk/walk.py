import logging
import math
from typing import Optional

import numpy as np

from lackwalk.full_walk.classes import (
    ArcBlocks,
    ArcState,
    Coin,
    Oracle,
    SearchStep,
    Shift,
    WalkStep,
    join_blocks,
    marked_probability,
    search_step_blocks,
)
from lackwalk.graph.instance import BipartiteInstance
from lackwalk.shared.exceptions import VerificationError
from lackwalk.shared.trace import EvolutionTrace

logger = logging.getLogger(__name__)


# region Initial states
def initial_uniform(inst: BipartiteInstance, debug: bool = False) -> ArcState:
    """
    Uniform superposition over vertices, |s>: every vertex carries probability
    1/(n1+n2), spread over its arcs in proportion to the edge weights.
    """
    n1, n2 = inst.n1, inst.n2
    share = 1.0 / math.sqrt(n1 + n2)
    x_amp = share / math.sqrt(inst.degree_x)
    y_amp = share / math.sqrt(inst.degree_y)
    blocks = ArcBlocks(
        xy=np.full((n1, n2), x_amp, dtype=np.complex128),
        yx=np.full((n2, n1), y_amp, dtype=np.complex128),
        x_loops=np.full(n1, x_amp * math.sqrt(inst.l1), dtype=np.complex128),
        y_loops=np.full(n2, y_amp * math.sqrt(inst.l2), dtype=np.complex128),
    )
    return ArcState(inst, join_blocks(blocks), debug=debug)


def initial_stationary(inst: BipartiteInstance, debug: bool = False) -> ArcState:
    """
    State |sigma> fixed by the walk without oracle: amplitude 1 on every cross
    arc and sqrt(l) on each loop, normalized by sqrt(2·n1·n2 + l1·n1 + l2·n2).
    """
    n1, n2 = inst.n1, inst.n2
    amp = 1.0 / math.sqrt(2 * n1 * n2 + inst.l1 * n1 + inst.l2 * n2)
    blocks = ArcBlocks(
        xy=np.full((n1, n2), amp, dtype=np.complex128),
        yx=np.full((n2, n1), amp, dtype=np.complex128),
        x_loops=np.full(n1, amp * math.sqrt(inst.l1), dtype=np.complex128),
        y_loops=np.full(n2, amp * math.sqrt(inst.l2), dtype=np.complex128),
    )
    return ArcState(inst, join_blocks(blocks), debug=debug)


# region Operators
def apply_oracle(state: ArcState) -> ArcState:
    return state >> Oracle()


def apply_coin(state: ArcState) -> ArcState:
    return state >> Coin()


def apply_shift(state: ArcState) -> ArcState:
    return state >> Shift()


def apply_walk_step(state: ArcState) -> ArcState:
    """U_walk = S·C."""
    return state >> WalkStep()


def apply_search_step(state: ArcState) -> ArcState:
    """U = S·C·Q."""
    return state >> SearchStep()


def success_probability(state: ArcState) -> float:
    return state.success_probability()


# region Evolution
def evolve(
    state: ArcState,
    steps: int,
    norm_tolerance: Optional[float] = None,
) -> EvolutionTrace:
    """
    Success probability after 0..steps search steps. The input state is not modified.

    Args:
        state (ArcState): Starting state.
        steps (int): Number of applications of U.
        norm_tolerance (Optional[float]): If given, raise when the norm drifts
            from 1 by more than this at any step.

    Returns:
        EvolutionTrace: steps + 1 probabilities, engine "full".
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    inst = state.instance
    blocks = state.blocks()
    probs = np.empty(steps + 1, dtype=np.float64)
    for t in range(steps + 1):
        if t > 0:
            blocks = search_step_blocks(inst, blocks)
        probs[t] = marked_probability(inst, blocks)
        if norm_tolerance is not None:
            _check_norm(blocks, t, norm_tolerance)
        if state.debug:
            logger.debug("full engine t=%d p=%.17g", t, probs[t])
    return EvolutionTrace(probs, "full")


def _check_norm(blocks: ArcBlocks, t: int, tolerance: float) -> None:
    norm = float(np.linalg.norm(join_blocks(blocks)))
    if abs(norm - 1.0) > tolerance:
        raise VerificationError(f"Norm drifted to {norm!r} at t={t}")
