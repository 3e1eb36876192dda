import math
from unittest import TestCase

import numpy as np

from lackwalk.analytics.one_set import optimal_l1
from lackwalk.analytics.symmetric import symmetric_min_runtime
from lackwalk.experiments.sweeps import (
    HeatmapGrid,
    grid_values,
    heatmap,
    loopless_reference,
    peak_for,
    sweep_l1,
    symmetric_weight_scan,
)
from lackwalk.graph.instance import build_instance
from lackwalk.shared.exceptions import VerificationError

COMPLETE = build_instance(1000, 800, 1.2, 0.0, 3, 0)
IRREGULAR = build_instance(1000, 100, 0.15, 0.0, 3, 0)


class GridValuesTestCase(TestCase):
    def test_inclusive(self) -> None:
        self.assertEqual(grid_values(0.0, 10.0, 5).tolist(), [0.0, 2.5, 5.0, 7.5, 10.0])
        self.assertEqual(grid_values(3.0, 3.0, 1).tolist(), [3.0])
        self.assertEqual(len(grid_values(0.0, 10.0, 41)), 41)

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            grid_values(0.0, 1.0, 0)
        with self.assertRaises(ValueError):
            grid_values(2.0, 1.0, 3)


class OneSetPeaksTestCase(TestCase):
    def test_uniform_peak(self) -> None:
        peak = peak_for(COMPLETE, "uniform")
        self.assertLessEqual(abs(peak.t_star - 41), 1)
        self.assertAlmostEqual(peak.p_star, 0.9969, delta=0.005)
        self.assertAlmostEqual(peak.total_runtime, peak.t_star / peak.p_star, delta=1e-12)

    def test_y_loop_barely_matters(self) -> None:
        base = peak_for(COMPLETE, "uniform")
        shifted = peak_for(COMPLETE.with_weights(1.2, 10.0), "uniform")
        self.assertLess(abs(base.p_star - shifted.p_star), 2e-3)

    def test_stationary_boost(self) -> None:
        peak = peak_for(IRREGULAR, "stationary")
        self.assertGreaterEqual(peak.p_star, 0.995)
        self.assertLessEqual(abs(peak.t_star - round(math.pi * math.sqrt(1000 / 6))), 1)
        loopless = loopless_reference(IRREGULAR, "stationary")
        self.assertAlmostEqual(loopless.p_star, 0.5, delta=0.01)

    def test_improvement_threshold(self) -> None:
        for n2, improves in ((200, True), (150, False)):
            inst = build_instance(1000, n2, 0.0, 0.0, 3, 0)
            tuned = inst.with_weights(optimal_l1(inst), 0.0)
            weighted = peak_for(tuned, "uniform").p_star
            self.assertEqual(weighted > 1000 / (1000 + n2), improves, msg=f"n2={n2}")

    def test_regular_weight_range(self) -> None:
        for l1 in (0.5, 1.0):
            peak = peak_for(build_instance(500, 500, l1, 0.0, 1, 0), "stationary")
            self.assertGreater(peak.p_star, 0.5 + 0.005)
        for l1, above in ((2.8, True), (3.0, False)):
            peak = peak_for(build_instance(500, 500, l1, 0.0, 1, 0), "stationary")
            self.assertEqual(peak.p_star > 0.5, above, msg=f"l1={l1}")
            self.assertGreater(abs(peak.p_star - 0.5), 0.005)


class SweepL1TestCase(TestCase):
    def test_rise_and_fall(self) -> None:
        template = COMPLETE.with_weights(0.0, 0.0)
        small = sweep_l1(template, "uniform", [0.0, 0.05, 0.15, 0.25, 1.2])
        heights = [peak.p_star for peak in small]
        self.assertEqual(int(np.argmax(heights)), 4)
        large = sweep_l1(template, "uniform", [2.0, 4.0, 6.0, 8.0, 10.0])
        heights = [peak.p_star for peak in large]
        self.assertEqual(heights, sorted(heights, reverse=True))

    def test_single_entry(self) -> None:
        [only] = sweep_l1(COMPLETE, "stationary", [1.2], horizon=100)
        self.assertEqual(only, peak_for(COMPLETE, "stationary", 100))

    def test_short_horizon(self) -> None:
        with self.assertRaises(ValueError):
            sweep_l1(COMPLETE, "stationary", [1.2], horizon=2)


class LooplessReferenceTestCase(TestCase):
    def test_uniform_height(self) -> None:
        peak = loopless_reference(COMPLETE, "uniform")
        self.assertAlmostEqual(peak.p_star, 1000 / 1800, delta=0.02)

    def test_regular(self) -> None:
        peak = loopless_reference(build_instance(1000, 1000, 2.0, 2.0, 1, 0), "uniform")
        self.assertAlmostEqual(peak.p_star, 0.5, delta=0.02)
        self.assertAlmostEqual(peak.t_star, math.pi / (2 * math.sqrt(2)) * math.sqrt(2000), delta=2)


class HeatmapTestCase(TestCase):
    def test_layout(self) -> None:
        grid = heatmap(COMPLETE, "uniform", [0.6, 1.2, 2.4], [0.0, 5.0, 10.0], threads=2)
        self.assertEqual(grid.shape, (3, 3))
        self.assertEqual(grid.values().shape, (3, 3))
        cells = list(grid.iter_cells())
        self.assertEqual([(l1, l2) for l1, l2, _ in cells[:4]], [(0.6, 0.0), (0.6, 5.0), (0.6, 10.0), (1.2, 0.0)])
        for row in grid.values("pstar"):
            self.assertLess(float(np.max(row) - np.min(row)), 5e-3)

    def test_single_cell_matches_peak(self) -> None:
        grid = heatmap(COMPLETE, "stationary", [1.2], [0.0], metric="runtime", horizon=100)
        self.assertEqual(grid.cells[0][0], peak_for(COMPLETE, "stationary", 100))
        self.assertEqual(grid.values()[0, 0], grid.cells[0][0].total_runtime)

    def test_thread_count_does_not_matter(self) -> None:
        template = build_instance(30, 20, 0.0, 0.0, 2, 1)
        values = grid_values(0.0, 4.0, 3)
        one = heatmap(template, "uniform", values, values, horizon=60, threads=1)
        many = heatmap(template, "uniform", values, values, horizon=60, threads=4)
        self.assertEqual(one.cells, many.cells)

    def test_full_engine_matches_subspace(self) -> None:
        template = build_instance(10, 8, 0.0, 0.0, 2, 1)
        values = [0.0, 1.0, 3.0]
        full = heatmap(template, "stationary", values, values, horizon=40, engine="full")
        reduced = heatmap(template, "stationary", values, values, horizon=40, engine="subspace")
        for (_, _, a), (_, _, b) in zip(full.iter_cells(), reduced.iter_cells()):
            self.assertEqual(a.t_star, b.t_star)
            self.assertAlmostEqual(a.p_star, b.p_star, delta=1e-10)

    def test_engines_agree_on_tied_loopless_peaks(self) -> None:
        for template, horizon in (
            (build_instance(10, 8, 0.0, 0.0, 2, 1), 40),
            (build_instance(500, 1500, 0.0, 0.0, 2, 5), 60),
        ):
            full = peak_for(template, "stationary", horizon, "full")
            reduced = peak_for(template, "stationary", horizon, "subspace")
            self.assertEqual(full.t_star, reduced.t_star)
            self.assertAlmostEqual(full.total_runtime, reduced.total_runtime, delta=1e-9)

    def test_loops_help_dense_x_marks(self) -> None:
        template = build_instance(500, 1500, 0.0, 0.0, 5, 2)
        grid = heatmap(template, "stationary", [15.0], [5.0], metric="runtime")
        loopless = loopless_reference(template, "stationary")
        self.assertLess(grid.values()[0, 0], loopless.total_runtime)

    def test_loops_help_balanced_marks(self) -> None:
        template = build_instance(500, 1500, 0.0, 0.0, 3, 3)
        grid = heatmap(template, "stationary", [10.0], [1.0], metric="runtime")
        loopless = loopless_reference(template, "stationary")
        self.assertLess(grid.values()[0, 0], loopless.total_runtime)

    def test_dense_y_marks_uniform_has_no_speedup(self) -> None:
        template = build_instance(500, 1500, 0.0, 0.0, 2, 5)
        grid = heatmap(template, "uniform", [0.0, 2.0, 8.0], [0.0, 2.0, 8.0], metric="runtime")
        loopless = loopless_reference(template, "uniform")
        self.assertEqual(grid.values()[0, 0], loopless.total_runtime)
        self.assertGreaterEqual(float(np.min(grid.values())), 0.99 * loopless.total_runtime)

    def test_dense_y_marks_stationary_gain_is_small(self) -> None:
        template = build_instance(500, 1500, 0.0, 0.0, 2, 5)
        grid = heatmap(template, "stationary", [0.0, 8.0], [0.0], metric="runtime")
        loopless = loopless_reference(template, "stationary")
        self.assertEqual(loopless.t_star, 24)
        self.assertAlmostEqual(loopless.total_runtime, 24.19, delta=0.01)
        self.assertAlmostEqual(grid.values()[1, 0] / loopless.total_runtime, 0.957, delta=0.01)

    def test_symmetric_diagonal_beats_loopless(self) -> None:
        template = build_instance(1000, 1000, 0.0, 0.0, 3, 3)
        grid = heatmap(template, "uniform", [3.0], [3.0], metric="runtime")
        loopless = loopless_reference(template, "uniform")
        self.assertLess(grid.values()[0, 0], 0.99 * loopless.total_runtime)

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            heatmap(COMPLETE, "uniform", [], [1.0])
        with self.assertRaises(ValueError):
            heatmap(COMPLETE, "uniform", [1.0], [1.0], threads=0)
        with self.assertRaises(VerificationError):
            HeatmapGrid(np.array([1.0]), np.array([1.0, 2.0]), ((),), "pstar")


class SymmetricTestCase(TestCase):
    def test_exact_peak(self) -> None:
        inst = build_instance(1000, 1000, 5.0, 5.0, 5, 5)
        for init in ("uniform", "stationary"):
            peak = peak_for(inst, init)
            self.assertLessEqual(abs(peak.t_star - 18), 1)
            self.assertAlmostEqual(peak.p_star, 0.889, delta=0.02)

    def test_weight_scan(self) -> None:
        best, runtime = symmetric_weight_scan(2000, 10, grid_values(0.0, 10.0, 41).tolist())
        self.assertEqual(best, 5.0)
        self.assertAlmostEqual(runtime, symmetric_min_runtime(2000, 10), delta=1e-9)
        self.assertAlmostEqual(runtime / math.sqrt(2000 / 10), 1.443, delta=1.443 * 0.02)
        with self.assertRaises(ValueError):
            symmetric_weight_scan(2000, 10, [])
