import logging
import math
from typing import Callable, List, NamedTuple, Sequence

import numpy as np

from lackwalk.analytics.perturbation import first_order_eigensystem
from lackwalk.analytics.prediction import PerturbativeEigenpair, eigen_residual
from lackwalk.analytics.symmetric import symmetric_eigensystem, symmetric_instance
from lackwalk.full_walk.classes import ArcState, Coin, Oracle, SearchStep, Shift, WalkStep
from lackwalk.full_walk.walk import evolve, initial_stationary, initial_uniform
from lackwalk.graph.instance import BipartiteInstance, arc_count, build_instance
from lackwalk.shared.exceptions import VerificationError
from lackwalk.shared.types import INITIAL_STATES, RealMatrix
from lackwalk.shared.utils import orthogonality_error
from lackwalk.subspace.evolution import evolve_subspace
from lackwalk.subspace.models import ModelBuilder, build_model

logger = logging.getLogger(__name__)

EXACT_TOLERANCE = 1e-12
ENGINE_TOLERANCE = 1e-10
SCALING_RANGE = (1.4, 2.8)
CHECK_STEPS = 60
SEED = 7

BUNDLED_INSTANCES = (
    build_instance(6, 4, 0.5, 2.0, 2, 0),
    build_instance(5, 7, 0.0, 1.0, 0, 2),
    build_instance(6, 5, 1.0, 0.5, 2, 1),
    build_instance(8, 8, 2.0, 2.0, 2, 2),
    build_instance(3, 5, 0.0, 0.0, 1, 1),
)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    measured: float
    threshold: float


def _at_most(name: str, measured: float, threshold: float) -> CheckResult:
    return CheckResult(name, bool(measured <= threshold), measured, threshold)


def _random_state(inst: BipartiteInstance, rng: np.random.Generator) -> ArcState:
    size = arc_count(inst)
    values = rng.normal(size=size) + 1j * rng.normal(size=size)
    return ArcState(inst, values / np.linalg.norm(values))


# region Suites
def check_unitarity(
    instances: Sequence[BipartiteInstance], builder: ModelBuilder = build_model
) -> List[CheckResult]:
    """Norm drift of the full walk and orthogonality of every reduced operator."""
    drift = 0.0
    reduced = 0.0
    for inst in instances:
        state = initial_uniform(inst)
        for _ in range(CHECK_STEPS):
            state = state >> SearchStep()
            drift = max(drift, abs(state.norm() - 1.0))
        reduced = max(reduced, orthogonality_error(builder(inst).matrix))
    return [
        _at_most("full walk norm drift", drift, EXACT_TOLERANCE),
        _at_most("reduced operator orthogonality", reduced, EXACT_TOLERANCE),
    ]


def check_involutions(instances: Sequence[BipartiteInstance]) -> List[CheckResult]:
    """Oracle, coin and shift each square to the identity."""
    rng = np.random.default_rng(SEED)
    results = []
    for name, op in (("oracle", Oracle()), ("coin", Coin()), ("shift", Shift())):
        worst = 0.0
        for inst in instances:
            start = _random_state(inst, rng)
            worst = max(worst, (start >> op >> op).distance(start))
        results.append(_at_most(f"{name} squared is identity", worst, EXACT_TOLERANCE))
    return results


def check_stationarity(instances: Sequence[BipartiteInstance]) -> List[CheckResult]:
    worst = 0.0
    for inst in instances:
        sigma = initial_stationary(inst)
        worst = max(worst, (sigma >> WalkStep()).distance(sigma))
    return [_at_most("walk fixes the stationary state", worst, EXACT_TOLERANCE)]


def check_cross_engine(
    instances: Sequence[BipartiteInstance], builder: ModelBuilder = build_model
) -> List[CheckResult]:
    """Largest |p_full(t) - p_subspace(t)| over the instances and both starting states."""
    worst = 0.0
    for inst in instances:
        model = builder(inst)
        for init in INITIAL_STATES:
            start = initial_uniform(inst) if init == "uniform" else initial_stationary(inst)
            full = evolve(start, CHECK_STEPS)
            try:
                reduced = evolve_subspace(model, init, CHECK_STEPS)
            except VerificationError as error:
                logger.info("subspace engine rejected its own trace: %s", error)
                worst = math.inf
                continue
            worst = max(worst, full.max_deviation(reduced))
    return [_at_most("full and subspace traces agree", worst, ENGINE_TOLERANCE)]


def _worst_residual(matrix: RealMatrix, pairs: Sequence[PerturbativeEigenpair]) -> float:
    return max(eigen_residual(matrix, pair) for pair in pairs)


def check_residual_scaling() -> List[CheckResult]:
    """Eigenvector residuals shrink about twofold when N grows fourfold."""
    lo, hi = SCALING_RANGE
    ratios = []
    for small, large in (
        (build_instance(1000, 800, 1.2, 0.8, 3, 0), build_instance(4000, 3200, 1.2, 0.8, 3, 0)),
        (build_instance(1000, 800, 1.2, 0.8, 3, 2), build_instance(4000, 3200, 1.2, 0.8, 3, 2)),
    ):
        residuals = [
            _worst_residual(build_model(inst).matrix, first_order_eigensystem(inst))
            for inst in (small, large)
        ]
        ratios.append((f"first-order residual ratio k1={small.k1} k2={small.k2}", residuals))
    symmetric = [
        _worst_residual(build_model(symmetric_instance(n, 4, 2.0)).matrix, symmetric_eigensystem(n, 4, 2.0))
        for n in (400, 1600)
    ]
    ratios.append(("symmetric residual ratio", symmetric))
    results = []
    for name, (small_residual, large_residual) in ratios:
        ratio = small_residual / large_residual
        results.append(CheckResult(f"{name} in [{lo}, {hi}]", lo <= ratio <= hi, ratio, hi))
    return results


def run_checks(
    builder: ModelBuilder = build_model,
    instances: Sequence[BipartiteInstance] = BUNDLED_INSTANCES,
) -> List[CheckResult]:
    """
    Every invariant suite on the bundled small instances.

    Args:
        builder (ModelBuilder): Reduced-model factory checked against the full walk.
        instances (Sequence[BipartiteInstance]): Instances for the exact suites.

    Returns:
        List[CheckResult]: One row per property.
    """
    suites: List[Callable[[], List[CheckResult]]] = [
        lambda: check_unitarity(instances, builder),
        lambda: check_involutions(instances),
        lambda: check_stationarity(instances),
        lambda: check_cross_engine(instances, builder),
        check_residual_scaling,
    ]
    results: List[CheckResult] = []
    for suite in suites:
        results.extend(suite())
    failed = sum(not result.passed for result in results)
    logger.info("%d checks, %d failed", len(results), failed)
    return results


def format_report(results: Sequence[CheckResult]) -> str:
    """Fixed-width pass/fail table."""
    width = max(len(result.name) for result in results)
    lines = [f"{'status':<6}  {'check':<{width}}  {'measured':>12}  {'threshold':>12}"]
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(
            f"{status:<6}  {result.name:<{width}}  {result.measured:>12.4g}  {result.threshold:>12.4g}"
        )
    return "\n".join(lines)
