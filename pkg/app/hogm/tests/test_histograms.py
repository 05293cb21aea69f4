""" Tests for HoGM histograms and the DHoGM slope """
import numpy as np

from django.test import SimpleTestCase

from core.exceptions import AllZeroGradient, TooFewBins
from hogm.histograms import HogmHistogram, build_hogm, dhogm_slope


def histogram(counts):
    """ Helper function to wrap raw counts """
    return HogmHistogram(counts=np.asarray(counts, dtype=np.int64), bin_width=1.0, first_bin_lower_edge=0.0)


class BuildHogmTests(SimpleTestCase):
    """ Test histogram construction """

    def test_hand_binned(self):
        """ Test {1, 1, 1, 2, 2, 3} in 3 bins over (0, 3] gives [3, 2, 1] """
        hogm = build_hogm([1, 1, 1, 2, 2, 3], n_bins=3)

        self.assertEqual(hogm.counts.tolist(), [3, 2, 1])
        self.assertEqual(hogm.h(1), 3)
        self.assertEqual(hogm.bin_width, 1.0)

    def test_zeros_are_background(self):
        """ Test zero magnitudes are not counted """
        hogm = build_hogm([0, 0, 0, 1, 2, 3], n_bins=3)

        self.assertEqual(hogm.counts.tolist(), [1, 1, 1])

    def test_leading_empty_bins_dropped(self):
        """ Test h[1] is the first non-empty bin """
        hogm = build_hogm([3, 3, 4], n_bins=4)

        self.assertEqual(hogm.counts.tolist(), [2, 1])
        self.assertEqual(hogm.first_bin_lower_edge, 2.0)

    def test_all_zero(self):
        """ Test an all-zero input raises AllZeroGradient """
        with self.assertRaises(AllZeroGradient):
            build_hogm(np.zeros((4, 4)))

    def test_counts_are_conserved(self):
        """ Test the counts add up to the number of positive magnitudes """
        magnitudes = np.abs(np.random.default_rng(0).normal(size=5000))
        magnitudes[:300] = 0.0

        self.assertEqual(int(build_hogm(magnitudes, 100).counts.sum()), 4700)


class DhogmSlopeTests(SimpleTestCase):
    """ Test the DHoGM slope """

    def test_worked_example(self):
        """ Test [100, 50, 25, 12, 6] gives -0.94 """
        self.assertAlmostEqual(dhogm_slope(histogram([100, 50, 25, 12, 6])), -0.94, places=15)

    def test_flat_histogram(self):
        """ Test a flat histogram has slope 0 """
        for count in (1, 7, 1000):
            self.assertEqual(dhogm_slope(histogram([count] * 5)), 0.0)

    def test_only_first_five_bins_count(self):
        """ Test bins after the fifth do not change D """
        self.assertEqual(dhogm_slope(histogram([10, 8, 6, 4, 2])), dhogm_slope(histogram([10, 8, 6, 4, 2, 99, 0, 5])))

    def test_too_few_bins(self):
        """ Test fewer than 5 bins raise TooFewBins """
        with self.assertRaises(TooFewBins):
            dhogm_slope(histogram([4, 3, 2, 1]))

    def test_random_histograms_match_oracles(self):
        """ Test 100 random histograms against the bin-by-bin sum and the telescoped form """
        rng = np.random.default_rng(0)
        for _ in range(100):
            counts = rng.integers(0, 1000, size=rng.integers(5, 40))
            counts[0] = rng.integers(1, 1000)
            h = [int(value) for value in counts]
            summed = sum((h[n] - h[n - 1]) / h[0] for n in range(1, 5))
            telescoped = (h[4] - h[0]) / h[0]
            slope = dhogm_slope(histogram(counts))

            self.assertLessEqual(abs(slope - summed), 1e-12)
            self.assertLessEqual(abs(slope - telescoped), 1e-12)

    def test_scale_invariance(self):
        """ Test multiplying every count by a constant keeps D """
        counts = np.array([40, 33, 20, 9, 3, 1])
        self.assertEqual(dhogm_slope(histogram(counts)), dhogm_slope(histogram(7 * counts)))
