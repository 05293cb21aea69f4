""" Confusion matrices and classification metrics (PoorQuality is the positive class) """
import logging
from dataclasses import asdict, dataclass

from sklearn.metrics import confusion_matrix

from core.exceptions import EmptyMatrix
from core.labels import Quality

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError('Confusion counts cannot be negative')

    @property
    def total(self):
        return self.tp + self.fp + self.tn + self.fn

    def to_dict(self):
        return asdict(self)


def confusion_from_labels(y_true, y_pred):
    """ Rows are true labels (Good, Poor), columns predictions: [[tn, fp], [fn, tp]] """
    y_true = [int(label) for label in y_true]
    y_pred = [int(label) for label in y_pred]
    if not y_true:
        return ConfusionMatrix()
    (tn, fp), (fn, tp) = confusion_matrix(y_true, y_pred, labels=[Quality.GOOD, Quality.POOR])
    return ConfusionMatrix(tp=int(tp), fp=int(fp), tn=int(tn), fn=int(fn))


def recount(y_true, y_pred):
    """ Plain loop count of the matrix, used to cross-check reports """
    counts = {'tp': 0, 'fp': 0, 'tn': 0, 'fn': 0}
    for truth, prediction in zip(y_true, y_pred):
        poor_truth, poor_prediction = int(truth) == Quality.POOR, int(prediction) == Quality.POOR
        key = ('t' if poor_truth == poor_prediction else 'f') + ('p' if poor_prediction else 'n')
        counts[key] += 1
    return ConfusionMatrix(**counts)


def _ratio(numerator, denominator, name, undefined):
    if denominator == 0:
        undefined.append(name)
        return 0.0
    return numerator / denominator


def compute_metrics(cm):
    """
    Zero denominators give 0 and list the metric under 'undefined' so tables stay numeric.
    Balanced accuracy is reported next to accuracy; the two differ on unbalanced test sets.
    """
    if cm.total == 0:
        raise EmptyMatrix('Cannot compute metrics on an empty confusion matrix')
    undefined = []
    precision = _ratio(cm.tp, cm.tp + cm.fp, 'precision', undefined)
    recall = _ratio(cm.tp, cm.tp + cm.fn, 'recall', undefined)
    specificity = _ratio(cm.tn, cm.tn + cm.fp, 'specificity', undefined)
    f1 = _ratio(2 * precision * recall, precision + recall, 'f1', undefined)
    if undefined:
        logger.debug('Undefined metrics: %s', ', '.join(undefined))
    return {
        'accuracy': (cm.tp + cm.tn) / cm.total,
        'balanced_accuracy': (recall + specificity) / 2,
        'precision': precision,
        'recall': recall,
        'specificity': specificity,
        'f1': f1,
        'undefined': undefined,
    }
