""" AND fusion of the 2D and 3D path decisions """
import logging
from dataclasses import dataclass

from classifiers.decisions import PathDecision
from core.exceptions import BothUnscorable
from core.labels import PathLabel, PathMode, Quality

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QualityDecision:
    subject_id: str
    c_2d: PathDecision
    c_3d: PathDecision
    c_final: Quality
    confidence: float
    degraded_evidence: bool = False

    @property
    def confidence_kind(self):
        return 'P1' if self.c_final == Quality.GOOD else 'P2'

    def to_dict(self):
        return {
            'subject_id': self.subject_id,
            'c_2d': self.c_2d.to_dict(),
            'c_3d': self.c_3d.to_dict(),
            'c_final': int(self.c_final),
            'confidence': self.confidence,
            'confidence_kind': self.confidence_kind,
            'degraded_evidence': self.degraded_evidence,
        }


def _alone(subject_id, survivor, c_2d, c_3d, degraded):
    final = Quality(int(survivor.label))
    return QualityDecision(
        subject_id, c_2d, c_3d, final, survivor.probability_of(survivor.label),
        degraded_evidence=degraded and final == Quality.GOOD,
    )


def fuse(c_2d, c_3d, subject_id=''):
    """
    GoodQuality only when both paths say Good. The confidence is the mean of the
    two paths' probabilities for the final class and may be below 0.5.

    With one path Unscorable the other decides alone with its own probabilities;
    a Good verdict reached that way is flagged as degraded evidence.
    """
    if not c_2d.is_scorable and not c_3d.is_scorable:
        raise BothUnscorable(f'Subject {subject_id}: neither path is scorable')
    if not c_2d.is_scorable or not c_3d.is_scorable:
        survivor = c_2d if c_2d.is_scorable else c_3d
        logger.info('Subject %s: single-path fallback on the %s path', subject_id,
                    '2D' if survivor is c_2d else '3D')
        return _alone(subject_id, survivor, c_2d, c_3d, degraded=True)

    both_good = c_2d.label == PathLabel.GOOD and c_3d.label == PathLabel.GOOD
    final = Quality.GOOD if both_good else Quality.POOR
    label = PathLabel(int(final))
    confidence = (c_2d.probability_of(label) + c_3d.probability_of(label)) / 2
    return QualityDecision(subject_id, c_2d, c_3d, final, confidence)


def single_path(decision, c_2d, c_3d, subject_id=''):
    """ Ablation: the chosen path decides on its own """
    if not decision.is_scorable:
        raise BothUnscorable(f'Subject {subject_id}: the selected path is not scorable')
    return _alone(subject_id, decision, c_2d, c_3d, degraded=False)


def decide(c_2d, c_3d, path_mode=PathMode.FUSED, subject_id=''):
    path_mode = PathMode(path_mode)
    if path_mode == PathMode.TWO_D:
        return single_path(c_2d, c_2d, c_3d, subject_id)
    if path_mode == PathMode.THREE_D:
        return single_path(c_3d, c_2d, c_3d, subject_id)
    return fuse(c_2d, c_3d, subject_id)
