""" Per-path decisions: majority vote over slices (2D) and the threshold rule (3D) """
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import expit

from classifiers.mlp import mlp_predict
from core.exceptions import NonFiniteFeature
from core.labels import PathLabel

# A path is unscorable when more than this share of its units is degenerate
DEGENERATE_LIMIT = 0.5


@dataclass(frozen=True)
class PathDecision:
    label: PathLabel
    p_c1: Optional[float] = None
    p_c2: Optional[float] = None

    @classmethod
    def unscorable(cls):
        return cls(PathLabel.UNSCORABLE)

    @classmethod
    def from_poor_probability(cls, label, p_c2):
        return cls(PathLabel(label), 1.0 - float(p_c2), float(p_c2))

    @property
    def is_scorable(self):
        return self.label != PathLabel.UNSCORABLE

    def probability_of(self, label):
        return self.p_c1 if label == PathLabel.GOOD else self.p_c2

    def to_dict(self):
        if not self.is_scorable:
            return {'label': None, 'p_c1': None, 'p_c2': None}
        return {'label': int(self.label), 'p_c1': self.p_c1, 'p_c2': self.p_c2}


def too_degenerate(n_degenerate, n_units):
    return n_units == 0 or n_degenerate > DEGENERATE_LIMIT * n_units


def vote_slices(poor_probabilities):
    """
    Majority vote of per-slice labels (Poor iff p_c2 > 0.5; a tie is Poor).
    The confidences are the mean per-slice probabilities, which may disagree with the vote.
    """
    poor_probabilities = np.asarray(poor_probabilities, dtype=np.float64)
    poor_votes = int((poor_probabilities > 0.5).sum())
    good_votes = poor_probabilities.size - poor_votes
    label = PathLabel.POOR if poor_votes >= good_votes else PathLabel.GOOD
    return PathDecision.from_poor_probability(label, math.fsum(poor_probabilities.tolist()) / poor_probabilities.size)


def predict_2d(model, series):
    if too_degenerate(series.n_degenerate, len(series)):
        return PathDecision.unscorable()
    return vote_slices(mlp_predict(model, series.valid_triplets))


def predict_3d(threshold, d_final):
    """ GoodQuality iff D_final < t*; p_c2 = logistic((D_final - t*) / scale) """
    d_final = float(d_final)
    if not math.isfinite(d_final):
        raise NonFiniteFeature('D_final must be finite')
    label = PathLabel.GOOD if d_final < threshold.t_star else PathLabel.POOR
    if math.isfinite(threshold.t_star):
        p_c2 = float(expit((d_final - threshold.t_star) / threshold.scale))
    else:
        p_c2 = 0.0 if threshold.t_star > 0 else 1.0
    return PathDecision.from_poor_probability(label, p_c2)


def decide_3d(threshold, cuboids, n_cuboids):
    """ 3D decision of a subject, Unscorable when most cuboids are degenerate """
    if cuboids is None or too_degenerate(cuboids.n_degenerate, n_cuboids):
        return PathDecision.unscorable()
    return predict_3d(threshold, cuboids.d_final)
