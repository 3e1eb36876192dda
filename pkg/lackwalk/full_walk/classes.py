import logging
from typing import List, NamedTuple, Optional

import numpy as np
from typing_extensions import Self

from lackwalk.graph.instance import BipartiteInstance, arc_count
from lackwalk.shared.exceptions import InstanceError
from lackwalk.shared.types import ComplexMatrix, ComplexVector

logger = logging.getLogger(__name__)


class ArcBlocks(NamedTuple):
    """Views of a flat amplitude vector split by arc family."""

    xy: ComplexMatrix  # (n1, n2): arc x -> y
    yx: ComplexMatrix  # (n2, n1): arc y -> x
    x_loops: ComplexVector  # (n1,)
    y_loops: ComplexVector  # (n2,)


def split_blocks(inst: BipartiteInstance, amplitudes: ComplexVector) -> ArcBlocks:
    """Reshapes a flat vector into views; writing to a view writes the vector."""
    n1, n2 = inst.n1, inst.n2
    cross = n1 * n2
    return ArcBlocks(
        xy=amplitudes[:cross].reshape(n1, n2),
        yx=amplitudes[cross : 2 * cross].reshape(n2, n1),
        x_loops=amplitudes[2 * cross : 2 * cross + n1],
        y_loops=amplitudes[2 * cross + n1 :],
    )


def join_blocks(blocks: ArcBlocks) -> ComplexVector:
    return np.concatenate(
        (blocks.xy.ravel(), blocks.yx.ravel(), blocks.x_loops, blocks.y_loops)
    )


# region ArcState
class ArcState:
    """
    Amplitudes over every directed arc of the instance, loops included.

    Operators are applied with `>>` and always return a new state; the
    receiving state is left untouched.

    Args:
        instance (BipartiteInstance): The search problem.
        amplitudes (ComplexVector): Flat vector in `arc_index` order.
        debug (bool): Whether to log p(t) and keep every state in `history`.

    Example:
        >>> state = initial_stationary(inst, debug=True)
        >>> final = state >> SearchStep() >> SearchStep()
        >>> len(final.history)
        3
    """

    __slots__ = ("instance", "amplitudes", "debug", "history")

    instance: BipartiteInstance
    amplitudes: ComplexVector
    debug: bool
    history: List["ArcState"]

    def __init__(
        self,
        instance: BipartiteInstance,
        amplitudes: ComplexVector,
        debug: bool = False,
        history: Optional[List["ArcState"]] = None,
    ) -> None:
        values = np.asarray(amplitudes, dtype=np.complex128)
        if values.shape != (arc_count(instance),):
            raise InstanceError(
                f"Expected {arc_count(instance)} amplitudes, got shape {values.shape}"
            )
        self.instance = instance
        self.amplitudes = values
        self.debug = debug
        self.history = [] if history is None else history
        self._handle_debug()

    def update(self, amplitudes: ComplexVector) -> "ArcState":
        """New state on the same instance, sharing debug settings and history."""
        return ArcState(self.instance, amplitudes, self.debug, self.history)

    def copy(self) -> Self:
        return type(self)(self.instance, self.amplitudes.copy())

    def blocks(self) -> ArcBlocks:
        return split_blocks(self.instance, self.amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "ArcState") -> complex:
        """<self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def distance(self, other: "ArcState") -> float:
        return float(np.linalg.norm(self.amplitudes - other.amplitudes))

    def success_probability(self) -> float:
        """Total probability on arcs whose tail is marked."""
        return marked_probability(self.instance, self.blocks())

    def _handle_debug(self) -> None:
        """Logs p(t) and appends to history. Debug mode only."""
        if not self.debug:
            return
        logger.debug(
            "step %d: p=%.17g norm=%.17g",
            len(self.history),
            self.success_probability(),
            self.norm(),
        )
        self.history.append(self)


# region Kernels
def marked_probability(inst: BipartiteInstance, blocks: ArcBlocks) -> float:
    """Sum of |amplitude|^2 over arcs leaving the first k1 X- and k2 Y-vertices."""
    total = (
        np.sum(np.abs(blocks.xy[: inst.k1]) ** 2)
        + np.sum(np.abs(blocks.x_loops[: inst.k1]) ** 2)
        + np.sum(np.abs(blocks.yx[: inst.k2]) ** 2)
        + np.sum(np.abs(blocks.y_loops[: inst.k2]) ** 2)
    )
    return float(total)


def oracle_blocks(inst: BipartiteInstance, blocks: ArcBlocks) -> ArcBlocks:
    """Negates every arc leaving a marked vertex."""
    xy, yx, x_loops, y_loops = (b.copy() for b in blocks)
    xy[: inst.k1] *= -1
    x_loops[: inst.k1] *= -1
    yx[: inst.k2] *= -1
    y_loops[: inst.k2] *= -1
    return ArcBlocks(xy, yx, x_loops, y_loops)


def coin_blocks(inst: BipartiteInstance, blocks: ArcBlocks) -> ArcBlocks:
    """
    Reflects each vertex block about its weighted coin state:
    psi_u -> 2 <s_u|psi_u> s_u - psi_u, with s_u = (1, ..., 1, sqrt(l)) / sqrt(deg).
    """
    root_l1 = np.sqrt(inst.l1)
    root_l2 = np.sqrt(inst.l2)
    # 2 <s_u|psi_u> / sqrt(deg), one per vertex
    x_weight = 2.0 * (blocks.xy.sum(axis=1) + root_l1 * blocks.x_loops) / inst.degree_x
    y_weight = 2.0 * (blocks.yx.sum(axis=1) + root_l2 * blocks.y_loops) / inst.degree_y
    return ArcBlocks(
        xy=x_weight[:, np.newaxis] - blocks.xy,
        yx=y_weight[:, np.newaxis] - blocks.yx,
        x_loops=root_l1 * x_weight - blocks.x_loops,
        y_loops=root_l2 * y_weight - blocks.y_loops,
    )


def shift_blocks(blocks: ArcBlocks) -> ArcBlocks:
    """Flip-flop: |uv> -> |vu>, loops fixed."""
    return ArcBlocks(
        xy=np.ascontiguousarray(blocks.yx.T),
        yx=np.ascontiguousarray(blocks.xy.T),
        x_loops=blocks.x_loops.copy(),
        y_loops=blocks.y_loops.copy(),
    )


# region Operators
class Oracle:
    """
    Pipeable sign flip on all arcs with a marked tail.

    Example:
        >>> flipped = state >> Oracle()
    """

    __slots__ = ()

    def __rrshift__(self, other: ArcState) -> ArcState:
        blocks = oracle_blocks(other.instance, other.blocks())
        return other.update(join_blocks(blocks))


class Coin:
    """Pipeable generalized Grover coin, applied vertex by vertex."""

    __slots__ = ()

    def __rrshift__(self, other: ArcState) -> ArcState:
        blocks = coin_blocks(other.instance, other.blocks())
        return other.update(join_blocks(blocks))


class Shift:
    """Pipeable flip-flop shift."""

    __slots__ = ()

    def __rrshift__(self, other: ArcState) -> ArcState:
        return other.update(join_blocks(shift_blocks(other.blocks())))


class WalkStep:
    """Pipeable U_walk = S·C (no oracle)."""

    __slots__ = ()

    def __rrshift__(self, other: ArcState) -> ArcState:
        blocks = shift_blocks(coin_blocks(other.instance, other.blocks()))
        return other.update(join_blocks(blocks))


class SearchStep:
    """
    Pipeable search step U = S·C·Q: oracle, then coin, then shift.

    Args:
        times (int): How many steps to apply at once. Defaults to 1.

    Example:
        >>> later = initial_uniform(inst) >> SearchStep(41)
    """

    __slots__ = ("times",)

    times: int

    def __init__(self, times: int = 1) -> None:
        if times < 0:
            raise ValueError(f"Cannot apply a negative number of steps: {times}")
        self.times = times

    def __rrshift__(self, other: ArcState) -> ArcState:
        inst = other.instance
        blocks = other.blocks()
        for _ in range(self.times):
            blocks = search_step_blocks(inst, blocks)
        return other.update(join_blocks(blocks))


def search_step_blocks(inst: BipartiteInstance, blocks: ArcBlocks) -> ArcBlocks:
    return shift_blocks(coin_blocks(inst, oracle_blocks(inst, blocks)))
