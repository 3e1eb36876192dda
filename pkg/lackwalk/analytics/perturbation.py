import math
from typing import List, NamedTuple, Tuple

import numpy as np

from lackwalk.analytics.prediction import PerturbativeEigenpair
from lackwalk.graph.instance import BipartiteInstance
from lackwalk.shared.types import AnyVector, ComplexMatrix, RealMatrix, SubspaceCase
from lackwalk.subspace.models import build_model

HALF = 1 / math.sqrt(2)


class OperatorSplit(NamedTuple):
    """U ≈ U0 + U1: the order-one part and the order-1/sqrt(N) correction."""

    leading: RealMatrix
    correction: RealMatrix


class SectorBasis(NamedTuple):
    """Degenerate eigenvectors of U0 as columns, eigenvalue +1 and -1."""

    plus: RealMatrix
    minus: RealMatrix


# region Operator splits
def one_set_operator_split(inst: BipartiteInstance) -> OperatorSplit:
    """Large-N split of the 7×7 operator (basis aa, ab, ba, bb, bc, cb, cc)."""
    n1, n2, l1, l2, k = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1
    u0 = np.zeros((7, 7))
    for row, col, value in (
        (0, 0, 1), (4, 5, 1), (5, 4, 1), (1, 2, -1), (2, 1, -1), (3, 3, -1), (6, 6, -1),
    ):  # fmt: skip
        u0[row, col] = value
    loop_x = 2 * math.sqrt(l1 / n2)
    loop_y = 2 * math.sqrt(l2 / n1)
    marked = 2 * math.sqrt(k / n1)
    u1 = np.zeros((7, 7))
    u1[0, 1] = -loop_x
    u1[1, 4] = marked
    u1[2, 0] = -loop_x
    u1[3, 4] = loop_y
    u1[4, 6] = loop_x
    u1[5, 2] = marked
    u1[5, 3] = loop_y
    u1[6, 5] = loop_x
    return OperatorSplit(u0, u1)


def both_sets_operator_split(inst: BipartiteInstance) -> OperatorSplit:
    """Large-N split of the 12×12 operator."""
    n1, n2, l1, l2, k1, k2 = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1, inst.k2
    u0 = np.zeros((12, 12))
    for row, col, value in (
        (0, 0, 1), (1, 3, 1), (2, 9, -1), (3, 1, 1), (4, 4, 1), (5, 6, -1),
        (6, 5, -1), (7, 7, -1), (8, 10, 1), (9, 2, -1), (10, 8, 1), (11, 11, -1),
    ):  # fmt: skip
        u0[row, col] = value
    loop_x = 2 * math.sqrt(l1 / n2)
    loop_y = 2 * math.sqrt(l2 / n1)
    marked_x = 2 * math.sqrt(k1 / n1)
    marked_y = 2 * math.sqrt(k2 / n2)
    u1 = np.zeros((12, 12))
    for row, col, value in (
        (0, 2, -loop_x), (1, 5, -marked_x), (2, 10, marked_x), (3, 2, -marked_y),
        (4, 5, -loop_y), (5, 8, marked_y), (6, 3, -marked_x), (6, 4, -loop_y),
        (7, 8, loop_x), (8, 9, marked_x), (8, 11, loop_y), (9, 0, -loop_x),
        (9, 1, -marked_y), (10, 6, marked_y), (10, 7, loop_x), (11, 10, loop_y),
    ):  # fmt: skip
        u1[row, col] = value
    return OperatorSplit(u0, u1)


def operator_split(inst: BipartiteInstance, case: SubspaceCase) -> OperatorSplit:
    if case == "one_set":
        return one_set_operator_split(inst)
    return both_sets_operator_split(inst)


# region Degenerate sectors
def _columns(dimension: int, vectors: List[List[Tuple[int, float]]]) -> RealMatrix:
    basis = np.zeros((dimension, len(vectors)))
    for j, entries in enumerate(vectors):
        for i, value in entries:
            basis[i, j] = value
    return basis


def unperturbed_eigenvectors(case: SubspaceCase) -> SectorBasis:
    """
    Eigenvectors of U0, grouped by eigenvalue.

    One set (aa, ab, ba, bb, bc, cb, cc):
        +1: (bc+cb)/√2, (-ab+ba)/√2, aa
        -1: cc, (-bc+cb)/√2, bb, (ab+ba)/√2
    """
    if case == "one_set":
        plus = _columns(7, [[(4, HALF), (5, HALF)], [(1, -HALF), (2, HALF)], [(0, 1.0)]])
        minus = _columns(
            7, [[(6, 1.0)], [(4, -HALF), (5, HALF)], [(3, 1.0)], [(1, HALF), (2, HALF)]]
        )
        return SectorBasis(plus, minus)
    plus = _columns(
        12,
        [
            [(8, HALF), (10, HALF)],  # (cd+dc)/√2
            [(2, -HALF), (9, HALF)],  # (-ad+da)/√2
            [(5, -HALF), (6, HALF)],  # (-bc+cb)/√2
            [(4, 1.0)],  # bb
            [(1, HALF), (3, HALF)],  # (ab+ba)/√2
            [(0, 1.0)],  # aa
        ],
    )
    minus = _columns(
        12,
        [
            [(11, 1.0)],  # dd
            [(8, -HALF), (10, HALF)],
            [(2, HALF), (9, HALF)],
            [(7, 1.0)],  # cc
            [(5, HALF), (6, HALF)],
            [(1, -HALF), (3, HALF)],
        ],
    )
    return SectorBasis(plus, minus)


def reduced_operator(matrix: AnyVector, vectors: AnyVector) -> ComplexMatrix:
    """Matrix of <v_i|M|v_j> over the columns of `vectors`."""
    return np.asarray(vectors.conj().T @ matrix @ vectors, dtype=np.complex128)


# region First order
def first_order_eigensystem(inst: BipartiteInstance) -> List[PerturbativeEigenpair]:
    """
    Numerical degenerate perturbation theory: diagonalizes U0 + U1 inside each
    degenerate sector of U0 and lifts the solutions back to subspace
    coordinates. Covers every case, including marked vertices in both sets
    with unequal parameters.

    Eigenvalues are reported as the phase of the reduced eigenvalue, which
    is unit-modulus only up to second order.
    Coordinates refer to the basis of `build_model(inst)`.
    """
    model = build_model(inst)
    split = operator_split(model.instance, model.case)
    perturbed = split.leading + split.correction
    pairs: List[PerturbativeEigenpair] = []
    for vectors in unperturbed_eigenvectors(model.case):
        values, mixes = np.linalg.eig(reduced_operator(perturbed, vectors))
        for j, value in enumerate(values):
            coords = vectors @ mixes[:, j]
            coords = coords / np.linalg.norm(coords)
            pairs.append(PerturbativeEigenpair(coords, complex(value / abs(value))))
    return pairs
