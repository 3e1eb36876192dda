from .embedding import (
    SubspaceProjection,
    project_onto_subspace,
    subspace_basis_vectors,
    vertex_classes,
)
from .evolution import evolve_subspace, initial_coords
from .models import (
    BOTH_SETS_LABELS,
    ONE_SET_LABELS,
    ModelBuilder,
    SubspaceModel,
    build_both_sets_model,
    build_model,
    build_one_set_model,
)

__all__ = [
    "BOTH_SETS_LABELS",
    "ModelBuilder",
    "ONE_SET_LABELS",
    "SubspaceModel",
    "SubspaceProjection",
    "build_both_sets_model",
    "build_model",
    "build_one_set_model",
    "evolve_subspace",
    "initial_coords",
    "project_onto_subspace",
    "subspace_basis_vectors",
    "vertex_classes",
]
