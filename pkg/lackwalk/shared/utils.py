import numpy as np

from lackwalk.shared.types import AnyVector

UNIT_TOLERANCE = 1e-12


def vector_norm(v: AnyVector) -> float:
    """Euclidean norm of a real or complex vector."""
    return float(np.linalg.norm(v))


def is_unit_vector(v: AnyVector, tolerance: float = UNIT_TOLERANCE) -> bool:
    """Checks if a vector has norm 1 within `tolerance`."""
    return abs(vector_norm(v) - 1.0) <= tolerance


def max_abs_deviation(a: AnyVector, b: AnyVector) -> float:
    """Largest entrywise |a - b|. Shapes must match."""
    if a.shape != b.shape:
        raise ValueError(f"Shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def orthogonality_error(matrix: AnyVector) -> float:
    """Returns max |MᵀM - I| over the columns of M (conjugate transpose for complex input)."""
    gram = matrix.conj().T @ matrix
    return max_abs_deviation(gram, np.eye(matrix.shape[1]))
