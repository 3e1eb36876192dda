import itertools
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose

from lackwalk.full_walk.walk import evolve, initial_stationary, initial_uniform
from lackwalk.graph.instance import BipartiteInstance, build_instance, swap_sets
from lackwalk.shared.exceptions import ModelError
from lackwalk.shared.trace import EvolutionTrace
from lackwalk.shared.types import INITIAL_STATES, InitialState
from lackwalk.shared.utils import is_unit_vector, orthogonality_error
from lackwalk.subspace.evolution import evolve_subspace, initial_coords
from lackwalk.subspace.models import (
    BOTH_SETS_LABELS,
    ONE_SET_LABELS,
    build_both_sets_model,
    build_model,
    build_one_set_model,
)


# region Setup
def full_trace(inst: BipartiteInstance, init: InitialState, steps: int) -> EvolutionTrace:
    start = initial_uniform(inst) if init == "uniform" else initial_stationary(inst)
    return evolve(start, steps)


def random_instance(rng: np.random.Generator, both: bool) -> BipartiteInstance:
    n1 = int(rng.integers(2, 2000))
    n2 = int(rng.integers(2, 2000))
    l1, l2 = (float(x) for x in rng.uniform(0, 10, size=2))
    k1 = int(rng.integers(1, min(n1, 20)))
    k2 = int(rng.integers(1, min(n2, 20))) if both else 0
    return build_instance(n1, n2, l1, l2, k1, k2)


# region Builders
class BuildModelTestCase(TestCase):
    def test_orthogonal_and_unit_coords(self) -> None:
        rng = np.random.default_rng(2024)
        for draw in range(100):
            inst = random_instance(rng, both=draw % 2 == 1)
            model = build_model(inst)
            self.assertLessEqual(orthogonality_error(model.matrix), 1e-12, inst)
            self.assertTrue(is_unit_vector(model.s_coords), inst)
            self.assertTrue(is_unit_vector(model.sigma_coords), inst)

    def test_one_set_layout(self) -> None:
        model = build_one_set_model(build_instance(1000, 800, 1.2, 0.0, 3, 0))
        self.assertEqual(model.case, "one_set")
        self.assertEqual(model.basis_labels, ONE_SET_LABELS)
        self.assertEqual(model.marked_indices, (0, 1))
        self.assertEqual(model.matrix.shape, (7, 7))
        d1 = 801.2
        self.assertAlmostEqual(model.matrix[0, 0], (800 - 1.2) / d1, delta=1e-15)
        self.assertAlmostEqual(model.matrix[0, 1], -2 * np.sqrt(800 * 1.2) / d1, delta=1e-15)
        self.assertAlmostEqual(model.matrix[1, 2], (6 - 1000) / 1000, delta=1e-15)
        # s coordinates follow the per-label edge weights
        n = 1800
        expected_s = np.sqrt(
            [
                3 * 1.2 / d1 / n,
                3 * 800 / d1 / n,
                3 * 800 / 1000 / n,
                0.0,
                800 * 997 / 1000 / n,
                800 * 997 / d1 / n,
                1.2 * 997 / d1 / n,
            ]
        )
        assert_allclose(model.s_coords, expected_s, atol=1e-15)
        self.assertFalse(model.matrix.flags.writeable)

    def test_both_sets_layout(self) -> None:
        model = build_both_sets_model(build_instance(5, 7, 0.3, 0.8, 1, 2))
        self.assertEqual(model.case, "both_sets")
        self.assertEqual(model.basis_labels, BOTH_SETS_LABELS)
        self.assertEqual(model.marked_indices, (0, 1, 2, 3, 4, 5))
        self.assertEqual(model.matrix.shape, (12, 12))

    def test_rejections(self) -> None:
        with self.assertRaises(ModelError):
            build_one_set_model(build_instance(6, 4, 1.0, 0.0, 0, 0))
        with self.assertRaises(ModelError):
            build_one_set_model(build_instance(6, 4, 1.0, 0.0, 6, 0))
        with self.assertRaises(ModelError):
            build_one_set_model(build_instance(6, 4, 1.0, 0.0, 2, 1))
        with self.assertRaises(ModelError):
            build_both_sets_model(build_instance(6, 4, 1.0, 0.0, 2, 0))
        with self.assertRaises(ModelError):
            build_both_sets_model(build_instance(6, 4, 1.0, 0.0, 2, 4))
        with self.assertRaises(ModelError):
            build_model(build_instance(6, 4, 1.0, 0.0, 0, 0))

    def test_dispatch(self) -> None:
        self.assertEqual(build_model(build_instance(6, 4, 1, 0, 2, 0)).case, "one_set")
        self.assertEqual(build_model(build_instance(6, 4, 1, 0, 2, 1)).case, "both_sets")
        inst = build_instance(6, 4, 1.5, 0.5, 0, 2)
        model = build_model(inst)
        self.assertEqual(model.case, "one_set")
        self.assertTrue(model.swapped)
        self.assertEqual(model.instance, swap_sets(inst))
        self.assertEqual(model.source_instance, inst)


# region Evolution
class EvolveSubspaceTestCase(TestCase):
    def test_initial_probability(self) -> None:
        model = build_model(build_instance(1000, 800, 1.2, 0.0, 3, 0))
        trace = evolve_subspace(model, "uniform", 0)
        self.assertEqual(len(trace), 1)
        self.assertAlmostEqual(trace[0], 3 / 1800, delta=1e-15)
        model = build_model(build_instance(9, 5, 1.5, 0.5, 2, 1))
        self.assertAlmostEqual(evolve_subspace(model, "uniform", 0)[0], 3 / 14, delta=1e-15)

    def test_initial_coords_is_a_copy(self) -> None:
        model = build_model(build_instance(6, 4, 1.5, 0.5, 2, 0))
        coords = initial_coords(model, "stationary")
        coords[0] = 5.0
        self.assertNotEqual(model.sigma_coords[0], 5.0)

    def test_stationary_boost(self) -> None:
        model = build_model(build_instance(1000, 800, 1.2, 0.0, 3, 0))
        trace = evolve_subspace(model, "stationary", 60)
        self.assertGreaterEqual(trace.max(), 0.99)
        self.assertLessEqual(abs(trace.argmax() - 41), 1)
        boosted = build_model(build_instance(1000, 100, 0.15, 0.0, 3, 0))
        self.assertGreaterEqual(evolve_subspace(boosted, "stationary", 60).max(), 0.995)

    def test_loopless_stationary_reaches_one_half(self) -> None:
        model = build_model(build_instance(1000, 100, 0.0, 0.0, 3, 0))
        trace = evolve_subspace(model, "stationary", 340)
        self.assertAlmostEqual(trace.max(), 0.5, delta=0.01)

    def test_loopless_symmetric_reaches_one(self) -> None:
        model = build_model(build_instance(1000, 1000, 0.0, 0.0, 5, 5))
        self.assertGreaterEqual(evolve_subspace(model, "uniform", 60).max(), 0.95)

    def test_bad_steps(self) -> None:
        model = build_model(build_instance(6, 4, 1.5, 0.5, 2, 0))
        with self.assertRaises(ValueError):
            evolve_subspace(model, "uniform", -1)

    def test_debug_logs(self) -> None:
        model = build_model(build_instance(6, 4, 1.5, 0.5, 2, 0))
        with self.assertLogs("lackwalk.subspace.evolution", level="DEBUG") as logs:
            evolve_subspace(model, "uniform", 2, debug=True)
        self.assertEqual(len(logs.output), 3)


# region Cross-engine
class CrossEngineTestCase(TestCase):
    def assert_engines_agree(self, inst: BipartiteInstance, steps: int = 60) -> None:
        model = build_model(inst)
        for init in INITIAL_STATES:
            exact = full_trace(inst, init, steps)
            reduced = evolve_subspace(model, init, steps)
            self.assertLessEqual(exact.max_deviation(reduced), 1e-10, (inst, init))

    def test_documented_instances(self) -> None:
        self.assert_engines_agree(build_instance(6, 4, 1.5, 0.5, 2, 0))
        self.assert_engines_agree(build_instance(5, 7, 0.3, 0.8, 1, 2))
        self.assert_engines_agree(build_instance(6, 4, 1.5, 0.5, 0, 2))

    def test_small_grid(self) -> None:
        sizes = (3, 5, 8, 12)
        weights = (0.0, 0.5, 2.0)
        for n1, n2 in itertools.product(sizes, sizes):
            for k1, k2 in itertools.product(range(3), range(3)):
                if k1 == k2 == 0:
                    continue
                for l1, l2 in itertools.product(weights, weights):
                    self.assert_engines_agree(build_instance(n1, n2, l1, l2, k1, k2))

    def test_set_swap_symmetry(self) -> None:
        inst = build_instance(40, 25, 0.7, 2.5, 3, 0)
        direct = evolve_subspace(build_model(inst), "stationary", 100)
        swapped = evolve_subspace(build_model(swap_sets(inst)), "stationary", 100)
        assert_allclose(direct.probs, swapped.probs, rtol=0, atol=0)
