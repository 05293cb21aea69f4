""" Tests for gradient magnitudes """
import itertools
import math

import numpy as np

from django.test import SimpleTestCase

from core.exceptions import TooSmall
from hogm.gradients import gradient_magnitude_2d, gradient_magnitude_3d


def difference(grid, index, axis):
    """ Scalar finite difference: central inside, one-sided on the borders """
    length = grid.shape[axis]
    position = index[axis]

    def at(offset):
        shifted = list(index)
        shifted[axis] = position + offset
        return grid[tuple(shifted)]

    if position == 0:
        return at(1) - at(0)
    if position == length - 1:
        return at(0) - at(-1)
    return (at(1) - at(-1)) / 2


def oracle_magnitude(grid):
    """ Voxel-by-voxel gradient magnitude """
    out = np.zeros(grid.shape)
    for index in itertools.product(*(range(n) for n in grid.shape)):
        out[index] = math.sqrt(sum(difference(grid, index, axis) ** 2 for axis in range(grid.ndim)))
    return out


class GradientTests(SimpleTestCase):
    """ Test the gradient magnitude operators """

    def test_constant_slice(self):
        """ Test a constant slice has zero gradient everywhere """
        self.assertTrue(np.all(gradient_magnitude_2d(np.full((5, 6), 3.0)) == 0.0))

    def test_unit_ramp(self):
        """ Test f(x, y) = x has magnitude 1 """
        x, _ = np.mgrid[0:6, 0:7].astype(np.float64)

        self.assertTrue(np.all(gradient_magnitude_2d(x)[1:-1, 1:-1] == 1.0))

    def test_oblique_ramp(self):
        """ Test f(x, y) = 3x + 4y has magnitude 5 """
        x, y = np.mgrid[0:6, 0:7].astype(np.float64)

        self.assertTrue(np.allclose(gradient_magnitude_2d(3 * x + 4 * y)[1:-1, 1:-1], 5.0, rtol=0, atol=1e-12))

    def test_constant_cuboid(self):
        """ Test a constant cuboid has zero gradient """
        self.assertTrue(np.all(gradient_magnitude_3d(np.ones((4, 5, 6))) == 0.0))

    def test_ramp_cuboid(self):
        """ Test f(x, y, z) = x + 2y + 2z has magnitude 3 """
        x, y, z = np.mgrid[0:5, 0:6, 0:7].astype(np.float64)

        self.assertTrue(np.allclose(gradient_magnitude_3d(x + 2 * y + 2 * z)[1:-1, 1:-1, 1:-1], 3.0,
                                    rtol=0, atol=1e-12))

    def test_matches_scalar_oracle(self):
        """ Test 20 random 7x7x7 grids against the voxel loop """
        rng = np.random.default_rng(0)
        for _ in range(20):
            grid = rng.normal(size=(7, 7, 7))
            self.assertTrue(np.allclose(gradient_magnitude_3d(grid), oracle_magnitude(grid), rtol=0, atol=1e-12))

    def test_slice_matches_scalar_oracle(self):
        """ Test a random slice against the pixel loop """
        grid = np.random.default_rng(1).normal(size=(6, 9))

        self.assertTrue(np.allclose(gradient_magnitude_2d(grid), oracle_magnitude(grid), rtol=0, atol=1e-12))

    def test_offset_and_scale(self):
        """ Test adding a constant changes nothing and scaling scales the magnitude """
        grid = np.random.default_rng(2).uniform(size=(5, 5, 5))
        base = gradient_magnitude_3d(grid)

        self.assertTrue(np.allclose(gradient_magnitude_3d(grid + 10.0), base, rtol=0, atol=1e-12))
        self.assertTrue(np.allclose(gradient_magnitude_3d(2.5 * grid), 2.5 * base, rtol=1e-12, atol=0))

    def test_stack_of_equal_slices_matches_slice(self):
        """ Test a volume without through-plane variation has the in-plane 2D magnitude on every slice """
        slice_ = np.random.default_rng(3).uniform(size=(7, 8))
        volume = np.repeat(slice_[None], 5, axis=0)
        cuboid = gradient_magnitude_3d(volume)

        for index in range(5):
            self.assertTrue(np.array_equal(cuboid[index], gradient_magnitude_2d(slice_)))

    def test_too_small(self):
        """ Test axes shorter than 3 samples and wrong dimensions raise TooSmall """
        with self.assertRaises(TooSmall):
            gradient_magnitude_2d(np.ones((2, 5)))
        with self.assertRaises(TooSmall):
            gradient_magnitude_3d(np.ones((5, 5)))
