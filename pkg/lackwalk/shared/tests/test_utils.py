from unittest import TestCase

import numpy as np

from lackwalk.shared.utils import (
    is_unit_vector,
    max_abs_deviation,
    orthogonality_error,
    vector_norm,
)


class UtilsTestCase(TestCase):
    def test_vector_norm(self) -> None:
        self.assertAlmostEqual(vector_norm(np.array([3.0, 4.0])), 5.0)
        self.assertAlmostEqual(vector_norm(np.array([1j, 0.0])), 1.0)

    def test_is_unit_vector(self) -> None:
        self.assertTrue(is_unit_vector(np.array([0.6, 0.8])))
        self.assertTrue(is_unit_vector(np.array([1.0, 1e-7]), tolerance=1e-6))
        self.assertFalse(is_unit_vector(np.array([1.0, 1.0])))

    def test_max_abs_deviation(self) -> None:
        self.assertEqual(max_abs_deviation(np.array([1.0, 2.0]), np.array([1.0, 2.5])), 0.5)
        self.assertEqual(max_abs_deviation(np.array([]), np.array([])), 0.0)
        with self.assertRaises(ValueError):
            max_abs_deviation(np.array([1.0]), np.array([1.0, 2.0]))

    def test_orthogonality_error(self) -> None:
        angle = 0.3
        rotation = np.array(
            [[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]]
        )
        self.assertLess(orthogonality_error(rotation), 1e-15)
        self.assertAlmostEqual(orthogonality_error(2 * np.eye(2)), 3.0)

    def test_orthogonality_error_of_tall_matrix(self) -> None:
        columns = np.zeros((5, 2))
        columns[0, 0] = 1.0
        columns[3, 1] = 1.0
        self.assertEqual(orthogonality_error(columns), 0.0)
        columns[3, 1] = 2.0
        self.assertAlmostEqual(orthogonality_error(columns), 3.0)
