""" Tests for synthetic phantoms """
import numpy as np

from django.test import SimpleTestCase

from hogm.gradients import gradient_magnitude_3d
from synth.phantoms import TEXTURE_AMPLITUDE, fractal_texture, make_phantom
from synth.specs import PhantomSpec, Structure

SMALL = (32, 40, 40)


class PhantomTests(SimpleTestCase):
    """ Test phantom generation """

    def test_same_spec_is_bit_identical(self):
        """ Test a spec always produces the same volume """
        spec = PhantomSpec(shape=SMALL, seed=3)
        first, first_mask = make_phantom(spec)
        second, second_mask = make_phantom(spec)

        self.assertTrue(np.array_equal(first.data, second.data))
        self.assertTrue(np.array_equal(first_mask.data, second_mask.data))

    def test_seeds_differ(self):
        """ Test different seeds give different phantoms """
        first, _ = make_phantom(PhantomSpec(shape=SMALL, seed=1))
        second, _ = make_phantom(PhantomSpec(shape=SMALL, seed=2))

        self.assertFalse(np.array_equal(first.data, second.data))

    def test_nested_ellipsoid_levels(self):
        """ Test nested ellipsoids hold exactly the background and the contrast levels """
        spec = PhantomSpec(shape=SMALL, structure=Structure.NESTED_ELLIPSOIDS, contrast_levels=(0.3, 0.7))
        volume, _ = make_phantom(spec)

        self.assertEqual(set(np.unique(volume.data)), {0.0, 0.3, 0.7})

    def test_nonzero_voxels_inside_mask(self):
        """ Test every nonzero voxel lies inside the outer ellipsoid """
        for structure in Structure:
            volume, mask = make_phantom(PhantomSpec(shape=SMALL, structure=structure))

            self.assertFalse(volume.data[~mask.data].any())
            self.assertEqual(mask.source, 'synthetic')

    def test_textured_intensities_in_unit_range(self):
        """ Test textured phantoms stay in [0, 1] and are not piecewise constant """
        volume, mask = make_phantom(PhantomSpec(shape=SMALL, structure=Structure.PERLIN_TEXTURE))

        self.assertGreaterEqual(volume.data.min(), 0.0)
        self.assertLessEqual(volume.data.max(), 1.0)
        self.assertGreater(np.unique(volume.data[mask.data]).size, 100)

    def test_default_levels_have_dark_shell(self):
        """ Test the default outermost compartment is background-dark inside the mask """
        volume, mask = make_phantom(PhantomSpec(shape=SMALL, structure=Structure.NESTED_ELLIPSOIDS))

        self.assertEqual(set(np.unique(volume.data)), {0.0, 0.45, 0.9})
        self.assertGreater(np.count_nonzero(volume.data[mask.data] == 0.0), 0)

    def test_texture_gradients_stay_in_first_bin(self):
        """ Test texture gradients are far below 1% of the steepest boundary gradient """
        volume, _ = make_phantom(PhantomSpec(shape=SMALL, seed=4))
        texture = fractal_texture(SMALL, np.random.default_rng(0))
        steepest = gradient_magnitude_3d(volume.data).max()

        self.assertLess(TEXTURE_AMPLITUDE * gradient_magnitude_3d(texture).max(), 0.005 * steepest)

    def test_spec_needs_two_levels(self):
        """ Test a single contrast level is rejected """
        with self.assertRaises(ValueError):
            PhantomSpec(contrast_levels=(0.5,))
