import logging
from typing import List, Tuple

from lackwalk.analytics.one_set import (
    improvement_threshold,
    loopless_baselines,
    one_set_angles,
    one_set_peak,
    one_set_peak_bound,
    optimal_l1,
    optimal_l2,
)
from lackwalk.analytics.symmetric import (
    symmetric_loopless_runtime,
    symmetric_min_runtime,
    symmetric_optimal_weight,
    symmetric_parameters,
    symmetric_peak,
)
from lackwalk.cli.config import RunConfig
from lackwalk.cli.output import write_heatmap_csv, write_key_values, write_trace_csv
from lackwalk.cli.verify import CheckResult, format_report, run_checks
from lackwalk.experiments.engines import default_horizon, trace_for
from lackwalk.experiments.sweeps import HeatmapGrid, grid_values, heatmap, loopless_reference
from lackwalk.graph.instance import is_one_set_case, is_symmetric_case, swap_sets
from lackwalk.shared.exceptions import FormulaError
from lackwalk.shared.trace import EvolutionTrace
from lackwalk.subspace.models import ModelBuilder, build_model

logger = logging.getLogger(__name__)


def cmd_simulate(config: RunConfig) -> EvolutionTrace:
    """Writes the `t,p` trace of one run."""
    inst = config.instance()
    trace = trace_for(inst, config.init, config.steps, config.resolved_engine)
    write_trace_csv(trace, config.out)
    return trace


def analytic_values(config: RunConfig) -> List[Tuple[str, float]]:
    """
    Closed-form quantities for the configured instance, as (key, value) pairs.

    One-set rows describe the run the closed forms cover: a uniform start is
    evaluated at the optimal l1, and a stationary start without loops falls
    back to the loopless baseline. The weight actually used is the last row.

    Raises:
        FormulaError: Marked vertices in both sets outside the symmetric case.
    """
    inst = config.instance()
    if is_symmetric_case(inst):
        n, k, l = symmetric_parameters(inst)
        peak = symmetric_peak(n, k, l)
        best = symmetric_optimal_weight(k)
        return [
            ("theta", peak.theta),
            ("phi", peak.phi),
            ("t_star", peak.t_star),
            ("p_star", peak.p_star),
            ("total_runtime", peak.total_runtime),
            ("optimal_l1", best),
            ("optimal_l2", best),
            ("min_runtime", symmetric_min_runtime(n, k)),
            ("loopless_T", symmetric_loopless_runtime(n, k)),
        ]
    if not is_one_set_case(inst):
        if inst.k1 != 0:
            raise FormulaError(
                "No closed form for marked vertices in both sets unless n1=n2, k1=k2 and l1=l2; "
                "use the subspace engine"
            )
        inst = swap_sets(inst)
    baseline = loopless_baselines(inst, config.init)
    if config.init == "uniform" and inst.l1 != optimal_l1(inst):
        logger.info("Uniform-state closed form evaluated at the optimal l1=%g", optimal_l1(inst))
        inst = inst.with_weights(optimal_l1(inst), inst.l2)
    if inst.l1 > 0:
        peak = one_set_peak(inst, config.init)
        theta, phi, t_star, p_star = peak.theta, peak.phi, peak.t_star, peak.p_star
    else:
        theta, phi = one_set_angles(inst)
        t_star, p_star = baseline.t_star, baseline.p_star
    return [
        ("theta", theta),
        ("phi", phi),
        ("t_star", t_star),
        ("p_star", p_star),
        ("total_runtime", t_star / p_star),
        ("optimal_l1", optimal_l1(inst)),
        ("optimal_l2", optimal_l2(inst.k1)),
        ("threshold_n2", improvement_threshold(inst.n1)),
        ("peak_bound", one_set_peak_bound(inst)),
        ("loopless_p_star", baseline.p_star),
        ("loopless_t_star", baseline.t_star),
        ("l1", inst.l1),
    ]


def cmd_analytic(config: RunConfig) -> List[Tuple[str, float]]:
    """Writes the `key,value` table of `analytic_values`."""
    values = analytic_values(config)
    write_key_values(values, config.out)
    return values


def cmd_heatmap(config: RunConfig) -> HeatmapGrid:
    """Writes one row per grid cell, with the loopless runtime repeated on each row."""
    template = config.instance()
    horizon = default_horizon(template) if config.steps is None else config.steps
    engine = config.resolved_engine
    grid = heatmap(
        template,
        config.init,
        grid_values(*config.l1_range).tolist(),
        grid_values(*config.l2_range).tolist(),
        metric=config.metric,
        horizon=horizon,
        engine=engine,
        threads=config.threads,
    )
    loopless = loopless_reference(template, config.init, horizon, engine)
    write_heatmap_csv(grid, loopless, config.out)
    return grid


def cmd_verify(config: RunConfig, builder: ModelBuilder = build_model) -> List[CheckResult]:
    """Runs every suite and prints the pass/fail table on standard output."""
    results = run_checks(builder)
    print(format_report(results))
    return results
