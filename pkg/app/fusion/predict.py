""" Subject-level prediction: both path decisions, then the selected fusion mode """
import logging

from classifiers.decisions import decide_3d, predict_2d
from core.batch import SubjectFailure
from core.exceptions import BothUnscorable
from fusion.rules import decide

logger = logging.getLogger(__name__)


def path_decisions(mlp, threshold, features):
    return predict_2d(mlp, features.slices), decide_3d(threshold, features.cuboids, features.n_cuboids)


def predict_subjects(mlp, threshold, features, path_mode):
    """
    features maps subject_id -> SubjectFeatures. Returns (decisions, failures);
    subjects no path can score become failures.
    """
    decisions, failures = [], []
    for subject_id in sorted(features):
        c_2d, c_3d = path_decisions(mlp, threshold, features[subject_id])
        try:
            decisions.append(decide(c_2d, c_3d, path_mode, subject_id))
        except BothUnscorable as exc:
            logger.warning('%s', exc)
            failures.append(SubjectFailure(subject_id, type(exc).__name__, str(exc)))
    return decisions, failures
