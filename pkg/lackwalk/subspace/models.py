import math
from dataclasses import dataclass, replace
from typing import Callable, Dict, Tuple

import numpy as np

from lackwalk.graph.instance import (
    BipartiteInstance,
    is_both_sets_case,
    is_one_set_case,
    swap_sets,
)
from lackwalk.shared.exceptions import ModelError
from lackwalk.shared.types import InitialState, RealMatrix, RealVector, SubspaceCase

# a: marked X, b: all of Y, c: unmarked X
ONE_SET_LABELS: Tuple[str, ...] = ("aa", "ab", "ba", "bb", "bc", "cb", "cc")
# a: marked X, b: marked Y, c: unmarked X, d: unmarked Y
BOTH_SETS_LABELS: Tuple[str, ...] = (
    "aa", "ab", "ad", "ba", "bb", "bc", "cb", "cc", "cd", "da", "dc", "dd",
)  # fmt: skip
ONE_SET_MARKED: Tuple[str, ...] = ("aa", "ab")
BOTH_SETS_MARKED: Tuple[str, ...] = ("aa", "ab", "ad", "ba", "bb", "bc")

ModelBuilder = Callable[[BipartiteInstance], "SubspaceModel"]


# region SubspaceModel
@dataclass(frozen=True)
class SubspaceModel:
    """
    Search operator restricted to the invariant subspace spanned by the
    class-uniform arc states, with the coordinates of both initial states.

    Label "uv" is the normalized sum of all arcs from class u to class v,
    and "uu" the normalized sum of the loops of class u.

    Args:
        case (SubspaceCase): "one_set" (7 labels) or "both_sets" (12 labels).
        instance (BipartiteInstance): Instance the matrix was built from.
            For Y-only marking this is the relabeled instance.
        basis_labels (Tuple[str, ...]): Ordered basis.
        matrix (RealMatrix): U = S·C·Q in that basis.
        s_coords (RealVector): Coordinates of |s>.
        sigma_coords (RealVector): Coordinates of |sigma>.
        marked_labels (Tuple[str, ...]): Labels whose tail is marked.
        swapped (bool): Whether X and Y were exchanged to reach `case`.
    """

    case: SubspaceCase
    instance: BipartiteInstance
    basis_labels: Tuple[str, ...]
    matrix: RealMatrix
    s_coords: RealVector
    sigma_coords: RealVector
    marked_labels: Tuple[str, ...]
    swapped: bool = False

    def __post_init__(self) -> None:
        for name in ("matrix", "s_coords", "sigma_coords"):
            values = np.array(getattr(self, name), dtype=np.float64)
            values.setflags(write=False)
            object.__setattr__(self, name, values)

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    @property
    def marked_indices(self) -> Tuple[int, ...]:
        return tuple(self.basis_labels.index(label) for label in self.marked_labels)

    @property
    def source_instance(self) -> BipartiteInstance:
        """The instance as given by the caller, before any relabeling."""
        return swap_sets(self.instance) if self.swapped else self.instance

    def coords(self, init: InitialState) -> RealVector:
        return self.s_coords if init == "uniform" else self.sigma_coords


# region Class bookkeeping
def class_sizes(inst: BipartiteInstance, case: SubspaceCase) -> Dict[str, int]:
    """Number of vertices in each class."""
    if case == "one_set":
        return {"a": inst.k1, "b": inst.n2, "c": inst.n1 - inst.k1}
    return {
        "a": inst.k1,
        "b": inst.k2,
        "c": inst.n1 - inst.k1,
        "d": inst.n2 - inst.k2,
    }


def class_in_x(letter: str) -> bool:
    """Classes a and c live in X in both reductions."""
    return letter in "ac"


def _label_weights(
    inst: BipartiteInstance, case: SubspaceCase, labels: Tuple[str, ...]
) -> Tuple[RealVector, RealVector]:
    """Per label: total edge weight of its arcs, and the degree of its tails."""
    sizes = class_sizes(inst, case)
    weights = np.empty(len(labels))
    degrees = np.empty(len(labels))
    for i, (tail, head) in enumerate(labels):
        tail_in_x = class_in_x(tail)
        loop_weight = inst.l1 if tail_in_x else inst.l2
        if tail == head:
            weights[i] = sizes[tail] * loop_weight
        else:
            weights[i] = sizes[tail] * sizes[head]
        degrees[i] = inst.degree_x if tail_in_x else inst.degree_y
    return weights, degrees


def _initial_coords(
    inst: BipartiteInstance, case: SubspaceCase, labels: Tuple[str, ...]
) -> Tuple[RealVector, RealVector]:
    weights, degrees = _label_weights(inst, case, labels)
    s_coords = np.sqrt(weights / (degrees * inst.n_vertices))
    sigma_coords = np.sqrt(weights / (2 * inst.n1 * inst.n2 + inst.l1 * inst.n1 + inst.l2 * inst.n2))
    return s_coords, sigma_coords


# region Builders
def build_one_set_model(inst: BipartiteInstance) -> SubspaceModel:
    """
    7×7 search operator for marked vertices in X only.

    Basis order: aa, ab, ba, bb, bc, cb, cc.

    Args:
        inst (BipartiteInstance): Needs k2 = 0 and 1 <= k1 < n1.

    Returns:
        SubspaceModel: The "one_set" model.

    Example:
        >>> model = build_one_set_model(build_instance(1000, 800, 1.2, 0.0, 3, 0))
        >>> model.matrix.shape
        (7, 7)
    """
    if inst.k2 != 0:
        raise ModelError(f"One-set model needs k2=0, got k2={inst.k2}")
    if not 1 <= inst.k1 < inst.n1:
        raise ModelError(f"One-set model needs 1 <= k1 < n1, got k1={inst.k1}, n1={inst.n1}")
    n1, n2, l1, l2, k = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1
    d1 = n2 + l1
    d2 = n1 + l2
    sq = math.sqrt
    u = np.zeros((7, 7))
    u[0, 0] = (n2 - l1) / d1
    u[0, 1] = -2 * sq(n2 * l1) / d1
    u[1, 2] = (2 * k - n1 - l2) / d2
    u[1, 3] = 2 * sq(l2 * k) / d2
    u[1, 4] = 2 * sq(k * (n1 - k)) / d2
    u[2, 0] = -2 * sq(n2 * l1) / d1
    u[2, 1] = (l1 - n2) / d1
    u[3, 2] = 2 * sq(l2 * k) / d2
    u[3, 3] = (l2 - n1) / d2
    u[3, 4] = 2 * sq(l2 * (n1 - k)) / d2
    u[4, 5] = (n2 - l1) / d1
    u[4, 6] = 2 * sq(n2 * l1) / d1
    u[5, 2] = 2 * sq(k * (n1 - k)) / d2
    u[5, 3] = 2 * sq(l2 * (n1 - k)) / d2
    u[5, 4] = (n1 - 2 * k - l2) / d2
    u[6, 5] = 2 * sq(n2 * l1) / d1
    u[6, 6] = (l1 - n2) / d1
    s_coords, sigma_coords = _initial_coords(inst, "one_set", ONE_SET_LABELS)
    return SubspaceModel(
        case="one_set",
        instance=inst,
        basis_labels=ONE_SET_LABELS,
        matrix=u,
        s_coords=s_coords,
        sigma_coords=sigma_coords,
        marked_labels=ONE_SET_MARKED,
    )


def build_both_sets_model(inst: BipartiteInstance) -> SubspaceModel:
    """
    12×12 search operator for marked vertices in both sets, assembled from
    nine 4×4 blocks over the label groups (aa, ab, ad, ba), (bb, bc, cb, cc)
    and (cd, da, dc, dd).
    """
    if not 1 <= inst.k1 < inst.n1:
        raise ModelError(f"Both-sets model needs 1 <= k1 < n1, got k1={inst.k1}, n1={inst.n1}")
    if not 1 <= inst.k2 < inst.n2:
        raise ModelError(f"Both-sets model needs 1 <= k2 < n2, got k2={inst.k2}, n2={inst.n2}")
    n1, n2, l1, l2, k1, k2 = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1, inst.k2
    d1 = n2 + l1
    d2 = n1 + l2
    m1 = n1 - k1
    m2 = n2 - k2
    sq = math.sqrt

    u1 = np.zeros((4, 4))
    u1[0] = [(n2 - l1) / d1, -2 * sq(k2 * l1) / d1, -2 * sq(l1 * m2) / d1, 0]
    u1[1] = [0, 0, 0, (n1 + l2 - 2 * k1) / d2]
    u1[3] = [-2 * sq(k2 * l1) / d1, (n2 + l1 - 2 * k2) / d1, -2 * sq(k2 * m2) / d1, 0]

    u2 = np.zeros((4, 4))
    u2[1] = [-2 * sq(k1 * l2) / d2, -2 * sq(k1 * m1) / d2, 0, 0]

    u3 = np.zeros((4, 4))
    u3[2] = [0, (2 * k1 - n1 - l2) / d2, 2 * sq(k1 * m1) / d2, 2 * sq(k1 * l2) / d2]

    u4 = np.zeros((4, 4))
    u4[0, 3] = -2 * sq(k1 * l2) / d2
    u4[2, 3] = -2 * sq(k1 * m1) / d2

    u5 = np.zeros((4, 4))
    u5[0] = [(n1 - l2) / d2, -2 * sq(l2 * m1) / d2, 0, 0]
    u5[1] = [0, 0, (2 * k2 - n2 - l1) / d1, 2 * sq(k2 * l1) / d1]
    u5[2] = [-2 * sq(l2 * m1) / d2, (2 * k1 + l2 - n1) / d2, 0, 0]
    u5[3] = [0, 0, 2 * sq(k2 * l1) / d1, (l1 - n2) / d1]

    u6 = np.zeros((4, 4))
    u6[1, 0] = 2 * sq(k2 * m2) / d1
    u6[3, 0] = 2 * sq(l1 * m2) / d1

    u7 = np.zeros((4, 4))
    u7[1] = [-2 * sq(l1 * m2) / d1, -2 * sq(k2 * m2) / d1, (2 * k2 + l1 - n2) / d1, 0]

    u8 = np.zeros((4, 4))
    u8[2] = [0, 0, 2 * sq(k2 * m2) / d1, 2 * sq(l1 * m2) / d1]

    u9 = np.zeros((4, 4))
    u9[0] = [0, 2 * sq(k1 * m1) / d2, (n1 - 2 * k1 - l2) / d2, 2 * sq(l2 * m1) / d2]
    u9[2] = [(n2 - 2 * k2 - l1) / d1, 0, 0, 0]
    u9[3] = [0, 2 * sq(k1 * l2) / d2, 2 * sq(l2 * m1) / d2, (l2 - n1) / d2]

    matrix = np.block([[u1, u2, u3], [u4, u5, u6], [u7, u8, u9]])
    s_coords, sigma_coords = _initial_coords(inst, "both_sets", BOTH_SETS_LABELS)
    return SubspaceModel(
        case="both_sets",
        instance=inst,
        basis_labels=BOTH_SETS_LABELS,
        matrix=matrix,
        s_coords=s_coords,
        sigma_coords=sigma_coords,
        marked_labels=BOTH_SETS_MARKED,
    )


def build_model(inst: BipartiteInstance) -> SubspaceModel:
    """
    Picks the reduction for `inst`: one-set when only X is marked, one-set on
    the relabeled instance when only Y is marked, both-sets otherwise.
    """
    if is_one_set_case(inst):
        return build_one_set_model(inst)
    if is_both_sets_case(inst):
        return build_both_sets_model(inst)
    if inst.k2 >= 1:
        return replace(build_one_set_model(swap_sets(inst)), swapped=True)
    raise ModelError("No marked vertex: the search operator has no reduced form")
