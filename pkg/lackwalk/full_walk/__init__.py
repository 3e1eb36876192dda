from .classes import ArcState, Coin, Oracle, SearchStep, Shift, WalkStep
from .walk import (
    apply_coin,
    apply_oracle,
    apply_search_step,
    apply_shift,
    apply_walk_step,
    evolve,
    initial_stationary,
    initial_uniform,
    success_probability,
)

__all__ = [
    "ArcState",
    "Coin",
    "Oracle",
    "SearchStep",
    "Shift",
    "WalkStep",
    "apply_coin",
    "apply_oracle",
    "apply_search_step",
    "apply_shift",
    "apply_walk_step",
    "evolve",
    "initial_stationary",
    "initial_uniform",
    "success_probability",
]
