""" The D_final threshold path: Youden-optimal t* and a logistic confidence """
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit
from scipy.stats import iqr
from sklearn.metrics import roc_curve

from core.exceptions import ClassMissing, NonFiniteFeature
from core.labels import Quality

logger = logging.getLogger(__name__)

SCALE_FLOOR = 1e-6
# J values closer than this are ties
J_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ThresholdModel:
    t_star: float
    scale: float
    youden_j: float = 0.0
    train_distribution_summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError('Threshold scale must be positive')


def candidate_thresholds(values):
    """ -inf, the midpoints between consecutive unique values, +inf """
    unique = np.unique(values)
    midpoints = (unique[:-1] + unique[1:]) / 2
    return np.concatenate([[-np.inf], midpoints, [np.inf]]), unique


def youden_scan(d_finals, poor):
    """
    J = sensitivity + specificity - 1 of every candidate, with PoorQuality as
    the positive class and the rule "Poor iff D_final >= t".

    roc_curve visits each unique value u as a threshold; the midpoint below u
    (and -inf below the smallest value) makes exactly the same predictions.
    """
    candidates, unique = candidate_thresholds(d_finals)
    fpr, tpr, thresholds = roc_curve(poor, d_finals, drop_intermediate=False)
    j_at = {float(threshold): float(t - f) for threshold, t, f in zip(thresholds[1:], tpr[1:], fpr[1:])}
    j_values = np.array([j_at[float(value)] for value in unique] + [0.0])
    return candidates, j_values


def _margin(candidate, values):
    if not np.isfinite(candidate):
        return 0.0
    return float(np.min(np.abs(values - candidate)))


def class_summary(d_finals, labels):
    summary = {}
    for quality in Quality:
        values = d_finals[labels == quality]
        summary[str(quality.value)] = {
            'count': int(values.size),
            'mean': float(values.mean()),
            'std': float(values.std()),
        }
    return summary


def fit_threshold(d_finals, labels):
    d_finals = np.asarray(d_finals, dtype=np.float64)
    labels = np.asarray([int(label) for label in labels])
    if not np.isfinite(d_finals).all():
        raise NonFiniteFeature('D_final values must be finite to fit the threshold')
    for quality in Quality:
        if not (labels == quality).any():
            raise ClassMissing(f'No training subject labelled {quality.label}')

    scale = max(float(iqr(d_finals)) / 2, SCALE_FLOOR)
    summary = class_summary(d_finals, labels)
    if np.unique(d_finals).size == 1:
        logger.warning('Every training D_final equals %r; threshold set to that value', d_finals[0])
        return ThresholdModel(float(d_finals[0]), scale, 0.0, summary)

    candidates, j_values = youden_scan(d_finals, labels == Quality.POOR)
    best_j = j_values.max()
    tied = np.flatnonzero(j_values >= best_j - J_TOLERANCE)
    # Widest margin to the training points first, then the smallest threshold
    best = min(tied, key=lambda index: (-_margin(candidates[index], d_finals), candidates[index]))
    t_star = float(candidates[best])

    logger.info('Threshold t* = %.6g (J = %.4f, scale %.4g, %d subjects)', t_star, best_j, scale, d_finals.size)
    return ThresholdModel(t_star, scale, float(best_j), summary)
