import math
from typing import List, Tuple

import numpy as np

from lackwalk.analytics.perturbation import unperturbed_eigenvectors
from lackwalk.analytics.prediction import (
    PerturbativeEigenpair,
    SpectralPrediction,
    checked_arcsin,
    unit_phase,
)
from lackwalk.graph.instance import BipartiteInstance, build_instance, is_symmetric_case
from lackwalk.shared.exceptions import FormulaError


def symmetric_parameters(inst: BipartiteInstance) -> Tuple[int, int, float]:
    """(N, k, l) = (n1 + n2, k1 + k2, l1) of a symmetric instance."""
    if not is_symmetric_case(inst):
        raise FormulaError(
            "No closed form for marked vertices in both sets unless n1=n2, k1=k2 and l1=l2; "
            "use the subspace engine"
        )
    return inst.n1 + inst.n2, inst.k1 + inst.k2, inst.l1


def symmetric_instance(n: int, k: int, l: float) -> BipartiteInstance:
    """Instance with N/2 vertices and k/2 marked vertices per set."""
    if n % 2 or k % 2:
        raise FormulaError(f"N and k must be even, got N={n}, k={k}")
    return build_instance(n // 2, n // 2, l, l, k // 2, k // 2)


def symmetric_angles(n: float, k: float, l: float) -> Tuple[float, float]:
    """sin(theta) = 2·sqrt(k + l)/sqrt(N), sin(phi) = 2·sqrt(l)/sqrt(N)."""
    theta = checked_arcsin(2 * math.sqrt(k + l) / math.sqrt(n), "theta")
    phi = checked_arcsin(2 * math.sqrt(l) / math.sqrt(n), "phi")
    return theta, phi


def symmetric_eigensystem(n: float, k: float, l: float) -> List[PerturbativeEigenpair]:
    """
    The six asymptotic eigenvectors reachable from |s> = |sigma> in the
    symmetric case, in the 12-label basis. The last two share eigenvalue 1
    and are not orthogonal.
    """
    if l <= 0 or k <= 0:
        raise FormulaError(f"Symmetric eigenvectors need k > 0 and l > 0, got k={k!r}, l={l!r}")
    theta, phi = symmetric_angles(n, k, l)
    plus = unperturbed_eigenvectors("both_sets").plus
    ratio = math.sqrt(k / l)
    spin = math.sqrt((k + l) / l)
    norm12 = math.sqrt(4 + 4 * k / l)
    mixes = [
        (np.array([ratio, -1j * spin, -1j * spin, 1, ratio, 1]) / norm12, unit_phase(-theta)),
        (np.array([ratio, 1j * spin, 1j * spin, 1, ratio, 1]) / norm12, unit_phase(theta)),
        (np.array([0, -1j, 1j, -1, 0, 1]) / 2, unit_phase(-phi)),
        (np.array([0, 1j, -1j, -1, 0, 1]) / 2, unit_phase(phi)),
        (
            np.array([-2 * math.sqrt(l / k), 0, 0, 1, 0, 1]) / math.sqrt(2 + 4 * l / k),
            complex(1.0),
        ),
        (np.array([-1, 0, 0, 0, 1, 0]) / math.sqrt(2), complex(1.0)),
    ]
    return [PerturbativeEigenpair(plus @ alpha, value) for alpha, value in mixes]


def symmetric_expansion_coeffs(n: float, k: float, l: float) -> Tuple[float, ...]:
    """Coefficients (a, ..., f) of the starting state on `symmetric_eigensystem`."""
    ab = k / (2 * math.sqrt(k * (k + l)))
    e = -math.sqrt(l) * math.sqrt(k + 2 * l) / (math.sqrt(2) * (k + l))
    f = -k / (math.sqrt(2) * (k + l))
    return (ab, ab, 0.0, 0.0, e, f)


def symmetric_p_of_t(n: float, k: float, l: float, t: float) -> float:
    theta, _ = symmetric_angles(n, k, l)
    return (
        k / (2 * (k + l) ** 2)
        * (2 * k + 3 * l - l * math.cos(theta * t))
        * math.sin(theta * t / 2) ** 2
    )  # fmt: skip


def symmetric_peak(n: float, k: float, l: float) -> SpectralPrediction:
    """
    t* = (pi/2)·sqrt(N/(k + l)) and p* = k(k + 2l)/(k + l)².

    Example:
        >>> peak = symmetric_peak(2000, 10, 5)
        >>> round(peak.t_star), round(peak.p_star, 3)
        (18, 0.889)
    """
    theta, phi = symmetric_angles(n, k, l)
    t_star = math.pi / 2 * math.sqrt(n / (k + l))
    p_star = k * (k + 2 * l) / (k + l) ** 2
    return SpectralPrediction.from_peak(theta, phi, t_star, p_star)


def symmetric_runtime(n: float, k: float, l: float) -> float:
    """T(l) = t*/p* from the closed forms."""
    return symmetric_peak(n, k, l).total_runtime


def symmetric_optimal_weight(k: float) -> float:
    """Weight l = k/2 minimizing T."""
    return k / 2


def symmetric_min_runtime(n: float, k: float) -> float:
    """T at l = k/2: (3·pi/8)·sqrt(3N/(2k)) ≈ 1.443·sqrt(N/k)."""
    return 3 * math.pi / 8 * math.sqrt(3 * n / (2 * k))


def symmetric_loopless_runtime(n: float, k: float) -> float:
    """T at l = 0: (pi/2)·sqrt(N/k)."""
    return math.pi / 2 * math.sqrt(n / k)
