import math
from typing import List, NamedTuple, Tuple

import numpy as np
from scipy.optimize import bisect

from lackwalk.analytics.prediction import (
    PerturbativeEigenpair,
    SpectralPrediction,
    checked_arcsin,
    unit_phase,
)
from lackwalk.graph.instance import BipartiteInstance, is_one_set_case
from lackwalk.shared.exceptions import FormulaError
from lackwalk.shared.types import InitialState

OPTIMAL_L2_BRACKET = (1.0 + 1e-9, 1.5 - 1e-9)
OPTIMAL_L2_XTOL = 1e-10
OPTIMAL_WEIGHT_RTOL = 1e-9


class LooplessBaseline(NamedTuple):
    p_star: float
    t_star: float


# region Helpers
def _require_one_set(inst: BipartiteInstance, need_loops: bool = False) -> None:
    if not is_one_set_case(inst):
        raise FormulaError(
            f"Closed forms need marked vertices in X only, got k1={inst.k1}, k2={inst.k2}"
        )
    if need_loops and inst.l1 <= 0:
        raise FormulaError("The perturbative closed forms are singular at l1=0")


def one_set_angles(inst: BipartiteInstance) -> Tuple[float, float]:
    """
    (theta, phi) with sin(theta) = sqrt((2·l1·n1 + k·n2)/(n1·n2)) and
    sin(phi) = sqrt((2·l1·n1 + k·n2 + 2·l2·n2)/(n1·n2)).
    """
    _require_one_set(inst)
    n1, n2, k = inst.n1, inst.n2, inst.k1
    base = 2 * inst.l1 * n1 + k * n2
    theta = checked_arcsin(math.sqrt(base / (n1 * n2)), "theta")
    phi = checked_arcsin(math.sqrt((base + 2 * inst.l2 * n2) / (n1 * n2)), "phi")
    return theta, phi


# region Eigensystem
def one_set_eigensystem(inst: BipartiteInstance) -> List[PerturbativeEigenpair]:
    """
    The seven asymptotic eigenvectors of the 7×7 operator, in basis order
    aa, ab, ba, bb, bc, cb, cc, with eigenvalues 1, e^{-i·theta}, e^{i·theta},
    -1, -1, -e^{i·phi}, -e^{-i·phi}.

    The two -1 vectors are neither orthogonal nor used by either initial state.

    Raises:
        FormulaError: If `inst` is not a one-set instance or l1 = 0.
    """
    _require_one_set(inst, need_loops=True)
    theta, phi = one_set_angles(inst)
    n1, n2, l2, k = inst.n1, inst.n2, inst.l2, inst.k1
    a = inst.l1 * n1  # l1·N1
    b = k * n2  # k·N2
    s = 2 * a + (k + 2 * l2) * n2
    sq = math.sqrt

    psi1 = np.array([1, 0, 0, 0, -sq(a / b), -sq(a / b), 0]) / sq(1 + 2 * a / b)
    mid = sq((2 * a + b) / (4 * a))
    side = sq(b / (4 * a))
    norm23 = sq(2 + b / a)
    psi2 = np.array([1, 1j * mid, -1j * mid, 0, side, side, 0]) / norm23
    psi3 = np.array([1, -1j * mid, 1j * mid, 0, side, side, 0]) / norm23
    psi4 = np.array([0, 1, 1, 0, 0, 0, sq(b / a)]) / norm23
    psi5 = np.array([0, 0, 0, 1, 0, 0, sq(l2 * n2 / a)]) / sq(1 + l2 * n2 / a)
    spin = sq(s / (2 * b))
    norm67 = sq(2 + 4 * (a + l2 * n2) / b)
    half = 1 / sq(2)
    psi6 = np.array([0, half, half, sq(2 * l2 / k), -1j * spin, 1j * spin, -sq(2 * a / b)]) / norm67
    psi7 = np.array([0, half, half, sq(2 * l2 / k), 1j * spin, -1j * spin, -sq(2 * a / b)]) / norm67
    return [
        PerturbativeEigenpair(psi1, 1.0),
        PerturbativeEigenpair(psi2, unit_phase(-theta)),
        PerturbativeEigenpair(psi3, unit_phase(theta)),
        PerturbativeEigenpair(psi4, -1.0),
        PerturbativeEigenpair(psi5, -1.0),
        PerturbativeEigenpair(psi6, -unit_phase(phi)),
        PerturbativeEigenpair(psi7, -unit_phase(-phi)),
    ]


def one_set_expansion_coeffs(
    inst: BipartiteInstance, init: InitialState
) -> Tuple[complex, ...]:
    """
    Coefficients (a, ..., g) of the starting state on the seven eigenvectors
    of `one_set_eigensystem`, in the same order.

    Example:
        >>> inst = build_instance(1000, 800, 1.2, 0.0, 3, 0)
        >>> a, b, c, d, e, f, g = one_set_expansion_coeffs(inst, "stationary")
        >>> round(a * a + b * b + c * c, 12)
        1.0
    """
    _require_one_set(inst, need_loops=True)
    n1, n2, k = inst.n1, inst.n2, inst.k1
    weight = 2 * inst.l1 * n1 + k * n2
    if init == "stationary":
        a = -math.sqrt(2 * inst.l1 * n1 / weight)
        b = math.sqrt(k * n2 / (2 * weight))
        return (complex(a), complex(b), complex(b), 0j, 0j, 0j, 0j)
    total = n1 + n2
    root_sum = math.sqrt(n1) + math.sqrt(n2)
    a = -root_sum * math.sqrt(inst.l1 * n1 / (total * weight))
    b = (math.sqrt(k) * n2 + math.sqrt(k * n1 * n2)) / (2 * math.sqrt(total * weight))
    f = 1j * (math.sqrt(n2) - math.sqrt(n1)) / (2 * math.sqrt(total))
    return (complex(a), complex(b), complex(b), 0j, 0j, f, -f)


# region Success probability
def one_set_p_of_t(inst: BipartiteInstance, init: InitialState, t: float) -> float:
    """
    Asymptotic success probability at time t.

    For |s> the result carries an alternating (-1)^t term, evaluated as
    cos(pi·t) so that real t is accepted.
    """
    _require_one_set(inst, need_loops=True)
    theta, phi = one_set_angles(inst)
    n1, n2, l1, l2, k = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1
    weight = 2 * l1 * n1 + k * n2
    if init == "stationary":
        shape = 6 * l1 * n1 + k * n2 + (k * n2 - 2 * l1 * n1) * math.cos(theta * t)
        return k * n2 * shape / weight**2 * math.sin(theta * t / 2) ** 2
    root1, root2 = math.sqrt(n1), math.sqrt(n2)
    lead = math.sqrt(k * n2) * (root1 + root2) / (2 * math.sqrt(weight))
    alternating = math.sqrt(k * n2) * (root1 - root2) / (2 * math.sqrt(weight + 2 * l2 * n2))
    first = lead * math.sin(theta * t) + math.cos(math.pi * t) * alternating * math.sin(phi * t)
    second = math.sqrt(k * l1 * n1 * n2) * (root1 + root2) / weight * (math.cos(theta * t) - 1)
    return (first**2 + second**2) / (n1 + n2)


# region Optimal weights
def optimal_l1(inst: BipartiteInstance) -> float:
    """l1 = k·n2 / (2·n1)."""
    _require_one_set(inst)
    return inst.k1 * inst.n2 / (2 * inst.n1)


def optimal_l2_root() -> float:
    """Root x in (1, 1.5) of pi·x = tan(pi·x)."""
    lo, hi = OPTIMAL_L2_BRACKET
    root = bisect(
        lambda x: math.tan(math.pi * x) - math.pi * x, lo, hi, xtol=OPTIMAL_L2_XTOL
    )
    return float(root)


def optimal_l2(k: float) -> float:
    """l2 = k·(x² - 1) maximizing the uniform-state peak, x from `optimal_l2_root`."""
    if k <= 0:
        raise FormulaError(f"optimal l2 needs k > 0, got {k!r}")
    x = optimal_l2_root()
    return k * (x * x - 1)


# region Peaks
def one_set_peak(inst: BipartiteInstance, init: InitialState) -> SpectralPrediction:
    """
    Peak time and height of the one-set search.

    Args:
        inst (BipartiteInstance): One-set instance with l1 > 0. For |s> the
            closed form only exists at l1 = optimal_l1(inst).
        init (InitialState): Starting state.

    Returns:
        SpectralPrediction: theta, phi, t*, p* and T = t*/p*.

    Raises:
        FormulaError: Outside the range covered by the closed forms.
    """
    _require_one_set(inst, need_loops=True)
    theta, phi = one_set_angles(inst)
    n1, n2, l1, l2, k = inst.n1, inst.n2, inst.l1, inst.l2, inst.k1
    if init == "stationary":
        if 6 * l1 * n1 <= k * n2:
            turning = 4 * l1 * n1 / (2 * l1 * n1 - k * n2)
            t_star = math.acos(max(-1.0, turning)) / theta
            p_star = k * n2 / (2 * k * n2 - 4 * l1 * n1)
        else:
            t_star = math.pi / theta
            p_star = 8 * k * l1 * n1 * n2 / (2 * l1 * n1 + k * n2) ** 2
        return SpectralPrediction.from_peak(theta, phi, t_star, p_star)
    best = optimal_l1(inst)
    if not math.isclose(l1, best, rel_tol=OPTIMAL_WEIGHT_RTOL):
        raise FormulaError(
            f"Uniform-state peak has a closed form only at l1={best!r}, got l1={l1!r}"
        )
    root1, root2 = math.sqrt(n1), math.sqrt(n2)
    wobble = (
        math.sqrt(k) * (root1 - root2) / (2 * math.sqrt(2 * (k + l2)))
        * math.sin(math.pi * math.sqrt(1 + l2 / k))
    )  # fmt: skip
    p_star = (wobble**2 + (root1 + root2) ** 2 / 2) / (n1 + n2)
    return SpectralPrediction.from_peak(theta, phi, math.pi / theta, p_star)


def one_set_peak_bound(inst: BipartiteInstance) -> float:
    """Lower bound (sqrt(n1) + sqrt(n2))² / (2·(n1 + n2)) of the uniform-state peak."""
    _require_one_set(inst)
    return (math.sqrt(inst.n1) + math.sqrt(inst.n2)) ** 2 / (2 * (inst.n1 + inst.n2))


def optimal_l2_peak_probability(inst: BipartiteInstance) -> float:
    """Uniform-state peak with both weights at their optimum."""
    _require_one_set(inst)
    tuned = inst.with_weights(optimal_l1(inst), optimal_l2(inst.k1))
    return one_set_peak(tuned, "uniform").p_star


def improvement_threshold(n1: float) -> float:
    """Smallest n2 for which the weighted uniform-state search beats the loopless one."""
    if n1 < 1:
        raise FormulaError(f"n1 must be >= 1, got {n1!r}")
    return (3 - 2 * math.sqrt(2)) * n1


def regular_improvement_range(k: float) -> Tuple[float, float]:
    """Open interval of l1 for which |sigma> on a regular graph peaks above 1/2."""
    return (0.0, (3 + 2 * math.sqrt(2)) * k / 2)


def loopless_baselines(inst: BipartiteInstance, init: InitialState) -> LooplessBaseline:
    """Peak height of the l1 = l2 = 0 search and its regular-graph peak time."""
    _require_one_set(inst)
    n_total = inst.n1 + inst.n2
    if init == "uniform":
        p_star = max(inst.n1, inst.n2) / n_total
    else:
        p_star = 0.5
    t_star = math.pi / (2 * math.sqrt(2)) * math.sqrt(n_total / inst.k1)
    return LooplessBaseline(p_star, t_star)
