from .instance import (
    ArcIndex,
    BipartiteInstance,
    arc_at,
    arc_count,
    arc_endpoints,
    arc_index,
    build_instance,
    degree,
    in_x,
    is_both_sets_case,
    is_marked,
    is_one_set_case,
    is_symmetric_case,
    iter_arcs,
    swap_sets,
)

__all__ = [
    "ArcIndex",
    "BipartiteInstance",
    "arc_at",
    "arc_count",
    "arc_endpoints",
    "arc_index",
    "build_instance",
    "degree",
    "in_x",
    "is_both_sets_case",
    "is_marked",
    "is_one_set_case",
    "is_symmetric_case",
    "iter_arcs",
    "swap_sets",
]
