""" Train/test experiments, ablation tables and cross-validation """
import logging

import numpy as np

from classifiers.mlp import mlp_train
from classifiers.threshold import fit_threshold
from core.exceptions import BothUnscorable, IdMismatch
from core.labels import PathMode, Quality
from evaluation.folds import stratified_folds
from evaluation.metrics import compute_metrics, confusion_from_labels, recount
from fusion.predict import predict_subjects
from fusion.rules import decide

logger = logging.getLogger(__name__)

METRIC_NAMES = ('accuracy', 'balanced_accuracy', 'precision', 'recall', 'specificity', 'f1')


def train_models(features, labels, config):
    """
    Fit both paths on the same labeled subjects. The threshold path uses the
    subjects with a scorable cuboid set.
    """
    subjects = sorted(subject for subject in features if subject in labels)
    mlp = mlp_train([features[s].slices for s in subjects], [labels[s] for s in subjects], config.mlp)
    with_cuboids = [s for s in subjects if features[s].cuboids is not None]
    threshold = fit_threshold([features[s].d_final for s in with_cuboids], [labels[s] for s in with_cuboids])
    return mlp, threshold


def evaluate_decisions(decisions, labels):
    """ Confusion matrix and metrics of decisions against ground-truth labels """
    unknown = sorted(decision.subject_id for decision in decisions if decision.subject_id not in labels)
    if unknown:
        raise IdMismatch(f'No ground-truth label for subject(s): {", ".join(unknown)}')
    ordered = sorted(decisions, key=lambda decision: decision.subject_id)
    y_true = [labels[decision.subject_id] for decision in ordered]
    y_pred = [decision.c_final for decision in ordered]
    cm = confusion_from_labels(y_true, y_pred)
    return {
        'n_subjects': len(ordered),
        'confusion_matrix': cm.to_dict(),
        'metrics': compute_metrics(cm),
        'recount_matches': recount(y_true, y_pred) == cm,
    }


def ablation_table(decisions, labels):
    """ Metrics of the 2D path alone, the 3D path alone and the fused decision over one decision set """
    table = {}
    for mode in (PathMode.TWO_D, PathMode.THREE_D, PathMode.FUSED):
        decided, unscorable = [], 0
        for decision in decisions:
            try:
                decided.append(decide(decision.c_2d, decision.c_3d, mode, decision.subject_id))
            except BothUnscorable:
                unscorable += 1
        row = evaluate_decisions(decided, labels) if decided else {'n_subjects': 0}
        row['n_unscorable'] = unscorable
        row['poor_subjects'] = sorted(d.subject_id for d in decided if d.c_final == Quality.POOR)
        table[mode.value] = row
    return table


def run_experiment(train_features, train_labels, test_features, test_labels, config, path_mode=None):
    """ Train on one cohort, evaluate on another; returns a report dict """
    path_mode = PathMode(path_mode or config.path_mode)
    mlp, threshold = train_models(train_features, train_labels, config)
    evaluated = {s: test_features[s] for s in test_features if s in test_labels}
    decisions, failures = predict_subjects(mlp, threshold, evaluated, path_mode)
    report = {
        'path_mode': path_mode.value,
        'n_train': len([s for s in train_features if s in train_labels]),
        'n_test': len(evaluated),
        'train': {'t_star': threshold.t_star, 'youden_j': threshold.youden_j, 'final_loss': mlp.final_loss},
        'test': evaluate_decisions(decisions, test_labels),
        'ablation': ablation_table(decisions, test_labels),
        'decisions': [decision.to_dict() for decision in decisions],
        'failures': [failure.to_dict() for failure in failures],
    }
    logger.info('Experiment (%s): accuracy %.4f on %d test subjects',
                path_mode.value, report['test']['metrics']['accuracy'], len(decisions))
    return report


def cross_validate(features, labels, config, k=5, seed=0, path_mode=None):
    """ Stratified k-fold: train on k-1 folds, test on the held-out fold """
    labeled = {s: labels[s] for s in features if s in labels}
    plan = stratified_folds(labeled, k=k, seed=seed)
    folds = []
    for fold, (train_ids, test_ids) in enumerate(plan.splits()):
        report = run_experiment(
            {s: features[s] for s in train_ids}, labeled,
            {s: features[s] for s in test_ids}, labeled,
            config, path_mode,
        )
        report['fold'] = fold
        folds.append(report)

    mean = {name: float(np.mean([fold['test']['metrics'][name] for fold in folds])) for name in METRIC_NAMES}
    pooled_decisions = [decision for fold in folds for decision in fold['decisions']]
    pooled = confusion_from_labels(
        [labeled[d['subject_id']] for d in pooled_decisions], [d['c_final'] for d in pooled_decisions]
    )
    return {
        'k': k,
        'seed': seed,
        'folds': folds,
        'mean_metrics': mean,
        'pooled': {'confusion_matrix': pooled.to_dict(), 'metrics': compute_metrics(pooled)},
    }
