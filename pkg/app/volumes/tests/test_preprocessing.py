""" Tests for masking, normalization and shape standardization """
import numpy as np

from django.test import SimpleTestCase

from core.config import PipelineConfig
from core.exceptions import DegenerateIntensity, EmptyMask, ShapeMismatch
from core.labels import Stage
from volumes.preprocessing import (
    apply_mask, fallback_mask, fit_to_shape, percentile_normalize, preprocess_subject, standardize_mask,
    standardize_shape,
)
from volumes.types import BrainMask, Volume


def full_mask(shape):
    return BrainMask(np.ones(shape, dtype=bool))


class ApplyMaskTests(SimpleTestCase):
    """ Test masking """

    def test_all_true_mask_is_identity(self):
        """ Test an all-true mask leaves the volume unchanged """
        volume = Volume(np.random.default_rng(0).uniform(size=(4, 4, 4)))
        masked = apply_mask(volume, full_mask((4, 4, 4)))

        self.assertTrue(np.array_equal(masked.data, volume.data))
        self.assertEqual(masked.stage, Stage.MASKED)

    def test_single_voxel_mask(self):
        """ Test only the one in-mask voxel survives """
        volume = Volume(np.full((4, 4, 4), 5.0))
        inside = np.zeros((4, 4, 4), dtype=bool)
        inside[1, 2, 3] = True
        masked = apply_mask(volume, BrainMask(inside))

        self.assertEqual(np.count_nonzero(masked.data), 1)
        self.assertEqual(masked.data[1, 2, 3], 5.0)

    def test_shape_mismatch(self):
        """ Test a mask of another shape raises """
        with self.assertRaises(ShapeMismatch):
            apply_mask(Volume(np.ones((4, 4, 5))), full_mask((4, 4, 4)))


class PercentileNormalizeTests(SimpleTestCase):
    """ Test percentile normalization """

    def test_affine_map(self):
        """ Test values spanning [0, 100] map linearly with p = (0, 100) """
        volume = Volume(np.linspace(0.0, 100.0, 101).reshape(101, 1, 1))
        normalized = percentile_normalize(volume, full_mask(volume.shape), 0, 100)

        self.assertAlmostEqual(normalized.data[50, 0, 0], 0.5)
        self.assertEqual(normalized.data.min(), 0.0)
        self.assertEqual(normalized.data.max(), 1.0)
        self.assertEqual(normalized.stage, Stage.NORMALIZED)

    def test_clipping_at_percentiles(self):
        """ Test with values 0..999 and p = (1, 99) both 990 and 999 map to 1 """
        data = np.arange(1000, dtype=np.float64).reshape(10, 10, 10)
        normalized = percentile_normalize(Volume(data), full_mask(data.shape), 1, 99)
        flat = normalized.data.ravel()

        self.assertEqual(flat[990], 1.0)
        self.assertEqual(flat[999], 1.0)
        self.assertEqual(flat[0], 0.0)
        self.assertAlmostEqual(flat[500], (500 - 9.99) / (989.01 - 9.99), places=12)
        self.assertLess(flat[989], 1.0)

    def test_idempotent_at_full_range(self):
        """ Test normalizing its own output with p = (0, 100) changes nothing """
        data = np.random.default_rng(1).uniform(10, 20, size=(6, 6, 6))
        mask = full_mask(data.shape)
        once = percentile_normalize(Volume(data), mask, 0, 100)
        twice = percentile_normalize(once, mask, 0, 100)

        self.assertTrue(np.allclose(once.data, twice.data, rtol=0, atol=1e-15))

    def test_constant_region(self):
        """ Test a constant in-mask region raises DegenerateIntensity """
        with self.assertRaises(DegenerateIntensity):
            percentile_normalize(Volume(np.full((4, 4, 4), 3.0)), full_mask((4, 4, 4)))

    def test_out_of_mask_stays_zero(self):
        """ Test voxels outside the mask are zero after normalization """
        data = np.random.default_rng(2).uniform(1, 2, size=(6, 6, 6))
        inside = np.zeros(data.shape, dtype=bool)
        inside[1:5, 1:5, 1:5] = True
        normalized = percentile_normalize(Volume(data), BrainMask(inside))

        self.assertTrue(np.all(normalized.data[~inside] == 0.0))


class StandardizeShapeTests(SimpleTestCase):
    """ Test padding and cropping to the target shape """

    def test_canonical_shape_unchanged(self):
        """ Test a volume already at the target shape is unchanged """
        data = np.zeros((192, 256, 256), dtype=np.uint8)
        data[100, 100, 100] = 1

        self.assertTrue(np.array_equal(fit_to_shape(data), data))

    def test_symmetric_pad(self):
        """ Test 190 slices get one slice of padding on each side """
        data = np.ones((190, 4, 4), dtype=np.uint8)
        padded = fit_to_shape(data, (192, 4, 4))

        self.assertEqual(padded.shape, (192, 4, 4))
        self.assertEqual(padded[0].sum(), 0)
        self.assertEqual(padded[-1].sum(), 0)
        self.assertEqual(padded[1:191].min(), 1)

    def test_odd_pad_extra_voxel_high(self):
        """ Test an odd remainder puts the extra voxel on the high side """
        padded = fit_to_shape(np.ones((189, 4, 4), dtype=np.uint8), (192, 4, 4))

        self.assertEqual(padded[:1].sum(), 0)
        self.assertEqual(padded[1:190].min(), 1)
        self.assertEqual(padded[190:].sum(), 0)

    def test_center_crop(self):
        """ Test 200 slices are cropped to slices 4..195 """
        data = np.broadcast_to(np.arange(200)[:, None, None], (200, 4, 4))
        cropped = fit_to_shape(data, (192, 4, 4))

        self.assertEqual(cropped[0, 0, 0], 4)
        self.assertEqual(cropped[-1, 0, 0], 195)

    def test_crop_keeps_centered_content(self):
        """ Test cropping keeps every voxel of a brain that fits inside the crop """
        data = np.zeros((200, 8, 8))
        data[50:150, 2:6, 2:6] = np.random.default_rng(3).uniform(size=(100, 4, 4))
        volume = standardize_shape(Volume(data), (192, 8, 8))

        self.assertTrue(np.array_equal(volume.data[46:146], data[50:150].astype(volume.data.dtype)))
        self.assertFalse(volume.data[:46].any())
        self.assertFalse(volume.data[146:].any())
        self.assertEqual(volume.stage, Stage.STANDARDIZED)

    def test_mask_stays_aligned(self):
        """ Test the mask is padded and cropped like the volume """
        data = np.zeros((10, 12, 7))
        data[3:6, 4:9, 2:5] = 1.0
        target = (12, 10, 8)
        volume = standardize_shape(Volume(data), target)
        mask = standardize_mask(BrainMask(data > 0), target)

        self.assertTrue(np.array_equal(volume.data > 0, mask.data))


class FallbackMaskTests(SimpleTestCase):
    """ Test the Otsu fallback mask """

    def test_bright_block(self):
        """ Test the mask is the bright block of a two-level volume """
        data = np.zeros((8, 8, 8))
        data[2:6, 2:6, 2:6] = 10.0
        mask = fallback_mask(Volume(data))

        self.assertTrue(np.array_equal(mask.data, data > 0))
        self.assertEqual(mask.source, 'fallback')

    def test_constant_volume(self):
        """ Test a constant volume has no fallback mask """
        with self.assertRaises(EmptyMask):
            fallback_mask(Volume(np.ones((4, 4, 4))))


class PreprocessSubjectTests(SimpleTestCase):
    """ Test the whole preprocessing chain """

    def test_standardized_output(self):
        """ Test output volume and mask share the target shape and intensities lie in [0, 1] """
        config = PipelineConfig(target_shape=(16, 16, 16), cuboid_shape=(8, 8, 8), slice_window=8)
        data = np.random.default_rng(4).uniform(100, 500, size=(14, 18, 16))
        inside = np.zeros(data.shape, dtype=bool)
        inside[3:11, 4:14, 3:13] = True
        volume, mask = preprocess_subject(Volume(data), BrainMask(inside), config)

        self.assertEqual(volume.shape, (16, 16, 16))
        self.assertEqual(mask.shape, (16, 16, 16))
        self.assertEqual(volume.stage, Stage.STANDARDIZED)
        self.assertGreaterEqual(volume.data.min(), 0.0)
        self.assertLessEqual(volume.data.max(), 1.0)
        self.assertTrue(np.all(volume.data[~mask.data] == 0.0))
