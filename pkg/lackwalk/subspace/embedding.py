from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from lackwalk.full_walk.classes import ArcState
from lackwalk.graph.instance import arc_endpoints
from lackwalk.shared.exceptions import ModelError
from lackwalk.shared.types import ComplexVector, RealMatrix
from lackwalk.subspace.models import SubspaceModel


class SubspaceProjection(NamedTuple):
    coords: ComplexVector
    lost_norm: float


def vertex_classes(model: SubspaceModel) -> NDArray[np.str_]:
    """Class letter of every vertex of the caller's instance, by vertex id."""
    source = model.source_instance
    effective = model.instance
    ids = np.arange(source.n_vertices)
    in_source_x = ids < source.n1
    position = np.where(in_source_x, ids, ids - source.n1)
    in_x = ~in_source_x if model.swapped else in_source_x
    if model.case == "one_set":
        y_letters = np.full(ids.shape, "b")
    else:
        y_letters = np.where(position < effective.k2, "b", "d")
    x_letters = np.where(position < effective.k1, "a", "c")
    return np.where(in_x, x_letters, y_letters)


def subspace_basis_vectors(model: SubspaceModel) -> RealMatrix:
    """
    Embeds every basis label in the full arc space.

    Returns:
        RealMatrix: Shape (arc_count, dimension); column i is the unit vector
            spread evenly over the arcs of label i.
    """
    tails, heads = arc_endpoints(model.source_instance)
    classes = vertex_classes(model)
    arc_labels = np.char.add(classes[tails], classes[heads])
    basis = np.zeros((len(arc_labels), model.dimension))
    for i, label in enumerate(model.basis_labels):
        mask = arc_labels == label
        count = int(np.count_nonzero(mask))
        if count == 0:
            raise ModelError(f"Label {label} has no arcs")
        basis[mask, i] = 1.0 / np.sqrt(count)
    return basis


def project_onto_subspace(state: ArcState, model: SubspaceModel) -> SubspaceProjection:
    """Coordinates of `state` in the model basis and the norm left outside it."""
    if state.instance != model.source_instance:
        raise ModelError("State and model were built for different instances")
    basis = subspace_basis_vectors(model)
    coords = basis.T @ state.amplitudes
    lost = float(np.linalg.norm(state.amplitudes - basis @ coords))
    return SubspaceProjection(coords, lost)
