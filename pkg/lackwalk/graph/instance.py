import math
import operator
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Tuple

import numpy as np

from lackwalk.shared.exceptions import InstanceError
from lackwalk.shared.types import IntVector


# region BipartiteInstance
@dataclass(frozen=True)
class BipartiteInstance:
    """
    Search problem on the complete bipartite graph K(n1, n2) with a weighted
    self-loop on every vertex and a prefix of each partite set marked.

    Vertex ids: X = 0..n1-1, Y = n1..n1+n2-1. Marked vertices are the first
    k1 ids of X and the first k2 ids of Y.

    Args:
        n1 (int): Number of vertices in X.
        n2 (int): Number of vertices in Y.
        l1 (float): Self-loop weight on every X-vertex.
        l2 (float): Self-loop weight on every Y-vertex.
        k1 (int): Number of marked vertices in X.
        k2 (int): Number of marked vertices in Y.

    Example:
        >>> inst = build_instance(1000, 800, 1.2, 0.0, 3, 0)
        >>> inst.degree_x, inst.degree_y
        (801.2, 1000.0)
    """

    n1: int
    n2: int
    l1: float
    l2: float
    k1: int
    k2: int

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "k1", "k2"):
            value = getattr(self, name)
            if isinstance(value, bool):
                raise InstanceError(f"{name} must be an integer, got {value!r}")
            try:
                object.__setattr__(self, name, operator.index(value))
            except TypeError:
                raise InstanceError(
                    f"{name} must be an integer, got {value!r}"
                ) from None
        for name in ("l1", "l2"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0:
                raise InstanceError(f"{name} must be a finite weight >= 0, got {value!r}")
            object.__setattr__(self, name, value)
        if self.n1 < 1 or self.n2 < 1:
            raise InstanceError(f"Set sizes must be positive, got n1={self.n1}, n2={self.n2}")
        if self.k1 < 0 or self.k2 < 0:
            raise InstanceError(f"Marked counts must be >= 0, got k1={self.k1}, k2={self.k2}")
        if self.k1 > self.n1:
            raise InstanceError(f"k1={self.k1} exceeds n1={self.n1}")
        if self.k2 > self.n2:
            raise InstanceError(f"k2={self.k2} exceeds n2={self.n2}")

    @property
    def n_vertices(self) -> int:
        return self.n1 + self.n2

    @property
    def degree_x(self) -> float:
        """Weighted degree of every X-vertex: n2 non-loop edges plus the loop weight."""
        return self.n2 + self.l1

    @property
    def degree_y(self) -> float:
        """Weighted degree of every Y-vertex."""
        return self.n1 + self.l2

    @property
    def n_marked(self) -> int:
        return self.k1 + self.k2

    def with_weights(self, l1: float, l2: float) -> "BipartiteInstance":
        """Same graph and marking, different self-loop weights."""
        return BipartiteInstance(self.n1, self.n2, l1, l2, self.k1, self.k2)


def build_instance(
    n1: int, n2: int, l1: float, l2: float, k1: int, k2: int
) -> BipartiteInstance:
    """Validates the fields and returns the canonical instance."""
    return BipartiteInstance(n1=n1, n2=n2, l1=l1, l2=l2, k1=k1, k2=k2)


def swap_sets(inst: BipartiteInstance) -> BipartiteInstance:
    """Relabels X <-> Y: (n1, n2, l1, l2, k1, k2) -> (n2, n1, l2, l1, k2, k1)."""
    return BipartiteInstance(inst.n2, inst.n1, inst.l2, inst.l1, inst.k2, inst.k1)


# region Case predicates
def is_one_set_case(inst: BipartiteInstance) -> bool:
    """Marked vertices only in X (the 7-dimensional reduction)."""
    return inst.k1 >= 1 and inst.k2 == 0


def is_both_sets_case(inst: BipartiteInstance) -> bool:
    """Marked vertices in X and Y (the 12-dimensional reduction)."""
    return inst.k1 >= 1 and inst.k2 >= 1


def is_symmetric_case(inst: BipartiteInstance) -> bool:
    """Regular graph, equal weights and equal marked counts in both sets."""
    return (
        is_both_sets_case(inst)
        and inst.n1 == inst.n2
        and inst.k1 == inst.k2
        and inst.l1 == inst.l2
    )


# region Vertices
def in_x(inst: BipartiteInstance, vertex: int) -> bool:
    """Whether `vertex` belongs to X. Raises on out-of-range ids."""
    _check_vertex(inst, vertex)
    return vertex < inst.n1


def is_marked(inst: BipartiteInstance, vertex: int) -> bool:
    """True iff `vertex` is among the first k1 of X or the first k2 of Y."""
    if in_x(inst, vertex):
        return vertex < inst.k1
    return vertex - inst.n1 < inst.k2


def degree(inst: BipartiteInstance, vertex: int) -> float:
    """Weighted degree of `vertex`, loop weight included."""
    return inst.degree_x if in_x(inst, vertex) else inst.degree_y


def _check_vertex(inst: BipartiteInstance, vertex: int) -> None:
    if isinstance(vertex, bool) or not 0 <= vertex < inst.n_vertices:
        raise InstanceError(
            f"Vertex id {vertex!r} out of range [0, {inst.n_vertices})"
        )


# region Arcs
class ArcIndex(NamedTuple):
    """Directed arc |tail head>; tail == head denotes the self-loop."""

    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


def arc_count(inst: BipartiteInstance) -> int:
    """2·n1·n2 cross arcs plus one loop arc per vertex, whatever its weight."""
    return 2 * inst.n1 * inst.n2 + inst.n1 + inst.n2


def arc_index(inst: BipartiteInstance, tail: int, head: int) -> int:
    """
    Position of arc (tail, head) in the flat amplitude vector.

    Layout: X->Y arcs row-major by (x, y), then Y->X arcs row-major by (y, x),
    then the X loops, then the Y loops.

    Example:
        >>> inst = build_instance(2, 3, 0.0, 0.0, 0, 0)
        >>> arc_index(inst, 0, 2), arc_index(inst, 2, 0), arc_index(inst, 4, 4)
        (0, 6, 16)
    """
    n1, n2 = inst.n1, inst.n2
    tail_in_x = in_x(inst, tail)
    head_in_x = in_x(inst, head)
    if tail == head:
        return 2 * n1 * n2 + tail
    if tail_in_x and not head_in_x:
        return tail * n2 + (head - n1)
    if head_in_x and not tail_in_x:
        return n1 * n2 + (tail - n1) * n1 + head
    raise InstanceError(f"({tail}, {head}) is not an arc: both ends in the same set")


def arc_at(inst: BipartiteInstance, index: int) -> ArcIndex:
    """Inverse of `arc_index`."""
    n1, n2 = inst.n1, inst.n2
    if isinstance(index, bool) or not 0 <= index < arc_count(inst):
        raise InstanceError(f"Arc index {index!r} out of range [0, {arc_count(inst)})")
    cross = n1 * n2
    if index < cross:
        x, y = divmod(index, n2)
        return ArcIndex(x, n1 + y)
    if index < 2 * cross:
        y, x = divmod(index - cross, n1)
        return ArcIndex(n1 + y, x)
    vertex = index - 2 * cross
    return ArcIndex(vertex, vertex)


def iter_arcs(inst: BipartiteInstance) -> Iterator[ArcIndex]:
    """All arcs in index order."""
    for index in range(arc_count(inst)):
        yield arc_at(inst, index)


def arc_endpoints(inst: BipartiteInstance) -> Tuple[IntVector, IntVector]:
    """Tails and heads of every arc, in index order, as two integer arrays."""
    n1, n2 = inst.n1, inst.n2
    x_ids = np.arange(n1)
    y_ids = np.arange(n1, n1 + n2)
    loops = np.arange(n1 + n2)
    tails = np.concatenate((np.repeat(x_ids, n2), np.repeat(y_ids, n1), loops))
    heads = np.concatenate((np.tile(y_ids, n1), np.tile(x_ids, n2), loops))
    return tails, heads
