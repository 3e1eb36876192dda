import math
from dataclasses import dataclass

import numpy as np

from lackwalk.shared.exceptions import FormulaError
from lackwalk.shared.types import AnyVector, ComplexVector

UNIT_SLACK = 1e-12


@dataclass(frozen=True)
class SpectralPrediction:
    """
    Closed-form description of one search run.

    Args:
        theta (float): Angle of the eigenvalues e^{±i·theta} that drive the search.
        phi (float): Angle of the second pair of eigenvalues.
        t_star (float): Predicted peak time, as a real number.
        p_star (float): Predicted peak success probability.
        total_runtime (float): Expected cost t_star / p_star.
    """

    theta: float
    phi: float
    t_star: float
    p_star: float
    total_runtime: float

    @classmethod
    def from_peak(
        cls, theta: float, phi: float, t_star: float, p_star: float
    ) -> "SpectralPrediction":
        runtime = t_star / p_star if p_star > 0 else math.inf
        return cls(theta, phi, t_star, p_star, runtime)


@dataclass(frozen=True)
class PerturbativeEigenpair:
    """Leading-order eigenvector (subspace coordinates) and its unit-modulus eigenvalue."""

    coords: ComplexVector
    eigenvalue: complex

    def __post_init__(self) -> None:
        values = np.array(self.coords, dtype=np.complex128)
        norm = float(np.linalg.norm(values))
        if abs(norm - 1.0) > UNIT_SLACK:
            raise FormulaError(f"Eigenvector norm is {norm!r}, expected 1")
        if abs(abs(self.eigenvalue) - 1.0) > UNIT_SLACK:
            raise FormulaError(f"Eigenvalue {self.eigenvalue!r} is not of unit modulus")
        values.setflags(write=False)
        object.__setattr__(self, "coords", values)
        object.__setattr__(self, "eigenvalue", complex(self.eigenvalue))


def eigen_residual(matrix: AnyVector, pair: PerturbativeEigenpair) -> float:
    """||U·psi - lambda·psi||."""
    return float(np.linalg.norm(matrix @ pair.coords - pair.eigenvalue * pair.coords))


def unit_phase(angle: float) -> complex:
    return complex(math.cos(angle), math.sin(angle))


def checked_arcsin(value: float, name: str) -> float:
    """arcsin that refuses arguments outside [0, 1] instead of returning nan."""
    if not 0.0 <= value <= 1.0:
        raise FormulaError(f"sin {name} = {value!r} is outside [0, 1]; the instance is too small")
    return math.asin(value)
