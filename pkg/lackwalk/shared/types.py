from typing import Any, Tuple

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Literal, TypeAlias

RealVector: TypeAlias = NDArray[np.float64]
RealMatrix: TypeAlias = NDArray[np.float64]
ComplexVector: TypeAlias = NDArray[np.complex128]
ComplexMatrix: TypeAlias = NDArray[np.complex128]
IntVector: TypeAlias = NDArray[np.int64]
AnyVector: TypeAlias = NDArray[Any]

InitialState = Literal["uniform", "stationary"]
EngineName = Literal["full", "subspace", "analytic"]
SubspaceCase = Literal["one_set", "both_sets"]
HeatmapMetric = Literal["pstar", "runtime"]

INITIAL_STATES: Tuple[InitialState, ...] = ("uniform", "stationary")
ENGINE_NAMES: Tuple[EngineName, ...] = ("full", "subspace", "analytic")
HEATMAP_METRICS: Tuple[HeatmapMetric, ...] = ("pstar", "runtime")
