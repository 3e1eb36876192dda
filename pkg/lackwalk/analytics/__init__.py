from .one_set import (
    LooplessBaseline,
    improvement_threshold,
    loopless_baselines,
    one_set_angles,
    one_set_eigensystem,
    one_set_expansion_coeffs,
    one_set_p_of_t,
    one_set_peak,
    one_set_peak_bound,
    optimal_l1,
    optimal_l2,
    optimal_l2_peak_probability,
    optimal_l2_root,
    regular_improvement_range,
)
from .perturbation import (
    OperatorSplit,
    SectorBasis,
    both_sets_operator_split,
    first_order_eigensystem,
    one_set_operator_split,
    reduced_operator,
    unperturbed_eigenvectors,
)
from .prediction import PerturbativeEigenpair, SpectralPrediction, eigen_residual
from .symmetric import (
    symmetric_angles,
    symmetric_eigensystem,
    symmetric_expansion_coeffs,
    symmetric_instance,
    symmetric_loopless_runtime,
    symmetric_min_runtime,
    symmetric_optimal_weight,
    symmetric_p_of_t,
    symmetric_parameters,
    symmetric_peak,
    symmetric_runtime,
)

__all__ = [
    "LooplessBaseline",
    "OperatorSplit",
    "PerturbativeEigenpair",
    "SectorBasis",
    "SpectralPrediction",
    "both_sets_operator_split",
    "eigen_residual",
    "first_order_eigensystem",
    "improvement_threshold",
    "loopless_baselines",
    "one_set_angles",
    "one_set_eigensystem",
    "one_set_expansion_coeffs",
    "one_set_operator_split",
    "one_set_p_of_t",
    "one_set_peak",
    "one_set_peak_bound",
    "optimal_l1",
    "optimal_l2",
    "optimal_l2_peak_probability",
    "optimal_l2_root",
    "reduced_operator",
    "regular_improvement_range",
    "symmetric_angles",
    "symmetric_eigensystem",
    "symmetric_expansion_coeffs",
    "symmetric_instance",
    "symmetric_loopless_runtime",
    "symmetric_min_runtime",
    "symmetric_optimal_weight",
    "symmetric_p_of_t",
    "symmetric_parameters",
    "symmetric_peak",
    "symmetric_runtime",
    "unperturbed_eigenvectors",
]
