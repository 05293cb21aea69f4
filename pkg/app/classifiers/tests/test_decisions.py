""" Tests for per-path decisions """
import numpy as np

from django.test import SimpleTestCase

from classifiers.decisions import PathDecision, decide_3d, predict_2d, vote_slices
from classifiers.mlp import MlpModel
from classifiers.threshold import ThresholdModel
from core.labels import PathLabel
from hogm.cuboids import CuboidFeatureSet
from hogm.slices import SliceFeatureSeries


def make_series(n_degenerate=0, window=60):
    triplets = np.full((window, 3), -0.5)
    triplets[:n_degenerate] = np.nan
    return SliceFeatureSeries(triplets=triplets, slice_indices=np.zeros((3, window), dtype=int))


class VoteTests(SimpleTestCase):
    """ Test the slice majority vote """

    def test_unanimous_vote(self):
        """ Test 60 slices voting Good with p_c1 0.9 """
        decision = vote_slices([0.1] * 60)

        self.assertEqual(decision.label, PathLabel.GOOD)
        self.assertAlmostEqual(decision.p_c1, 0.9, places=12)

    def test_majority_rules(self):
        """ Test 31 Poor votes beat 29 Good votes whatever the mean probability """
        decision = vote_slices([0.51] * 31 + [0.01] * 29)

        self.assertEqual(decision.label, PathLabel.POOR)
        self.assertGreater(decision.p_c1, 0.5)

    def test_tie_is_poor(self):
        """ Test a 30/30 split is PoorQuality """
        self.assertEqual(vote_slices([0.9] * 30 + [0.1] * 30).label, PathLabel.POOR)

    def test_probability_of_exactly_half_votes_good(self):
        """ Test a slice with p_c2 == 0.5 votes Good """
        self.assertEqual(vote_slices([0.5, 0.5, 0.6]).label, PathLabel.GOOD)

    def test_vote_ignores_slice_order(self):
        """ Test permuting the slices keeps the label """
        rng = np.random.default_rng(0)
        probabilities = rng.uniform(size=60)
        expected = vote_slices(probabilities)

        for _ in range(5):
            decision = vote_slices(rng.permutation(probabilities))
            self.assertEqual(decision.label, expected.label)
            self.assertAlmostEqual(decision.p_c2, expected.p_c2, places=12)

    def test_probabilities_sum_to_one(self):
        """ Test p_c1 + p_c2 = 1 """
        decision = vote_slices(np.linspace(0.0, 1.0, 60))

        self.assertAlmostEqual(decision.p_c1 + decision.p_c2, 1.0, delta=1e-9)


class PredictTwoDTests(SimpleTestCase):
    """ Test the 2D path decision """

    def setUp(self):
        self.model = MlpModel((3, 10, 14, 1), np.zeros(209), np.zeros(3), np.ones(3))

    def test_zero_network_votes_good(self):
        """ Test slices at p_c2 = 0.5 vote Good and report 0.5 """
        decision = predict_2d(self.model, make_series())

        self.assertEqual(decision.label, PathLabel.GOOD)
        self.assertEqual(decision.p_c2, 0.5)

    def test_half_degenerate_is_scorable(self):
        """ Test exactly half degenerate slices still scores """
        self.assertTrue(predict_2d(self.model, make_series(n_degenerate=30)).is_scorable)

    def test_mostly_degenerate_is_unscorable(self):
        """ Test more than half degenerate slices is Unscorable """
        decision = predict_2d(self.model, make_series(n_degenerate=31))

        self.assertEqual(decision.label, PathLabel.UNSCORABLE)
        self.assertIsNone(decision.p_c1)


class DecideThreeDTests(SimpleTestCase):
    """ Test the 3D path decision for a subject """

    def setUp(self):
        self.model = ThresholdModel(t_star=-0.5, scale=0.1)

    def test_missing_cuboids_unscorable(self):
        """ Test a subject without scorable cuboids is Unscorable """
        self.assertFalse(decide_3d(self.model, None, 27).is_scorable)

    def test_mostly_degenerate_cuboids_unscorable(self):
        """ Test 14 of 27 degenerate cuboids is Unscorable """
        values = np.full(27, -0.9)
        values[:14] = np.nan
        cuboids = CuboidFeatureSet(d3d_values=values, d_final=-0.9, cuboid_origins=())

        self.assertFalse(decide_3d(self.model, cuboids, 27).is_scorable)

    def test_scorable_cuboids(self):
        """ Test a scorable cuboid set follows the threshold rule """
        values = np.full(27, -0.9)
        values[:13] = np.nan
        cuboids = CuboidFeatureSet(d3d_values=values, d_final=-0.9, cuboid_origins=())

        self.assertEqual(decide_3d(self.model, cuboids, 27).label, PathLabel.GOOD)


class PathDecisionTests(SimpleTestCase):
    """ Test PathDecision serialization """

    def test_unscorable_serializes_to_nulls(self):
        """ Test Unscorable has null label and probabilities """
        self.assertEqual(PathDecision.unscorable().to_dict(), {'label': None, 'p_c1': None, 'p_c2': None})

    def test_scorable_to_dict(self):
        """ Test a scorable decision serializes its label as an integer """
        data = PathDecision.from_poor_probability(PathLabel.POOR, 0.75).to_dict()

        self.assertEqual(data, {'label': 2, 'p_c1': 0.25, 'p_c2': 0.75})
