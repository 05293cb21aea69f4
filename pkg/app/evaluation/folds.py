""" Stratified fold plans """
from collections import Counter
from dataclasses import dataclass

import numpy as np
from sklearn.model_selection import StratifiedKFold

from core.exceptions import TooFewPerClass
from core.labels import Quality


@dataclass(frozen=True)
class FoldPlan:
    """ Every subject belongs to exactly one of k folds """
    k: int
    assignments: dict
    seed: int = 0

    def test_ids(self, fold):
        return sorted(subject for subject, index in self.assignments.items() if index == fold)

    def train_ids(self, fold):
        return sorted(subject for subject, index in self.assignments.items() if index != fold)

    def splits(self):
        return [(self.train_ids(fold), self.test_ids(fold)) for fold in range(self.k)]


def stratified_folds(labels, k=5, seed=0):
    """ labels maps subject_id -> Quality; per-class fold sizes differ by at most one """
    if k < 2:
        raise TooFewPerClass('Cross-validation needs at least 2 folds')
    counts = Counter(int(label) for label in labels.values())
    for quality in Quality:
        if counts[quality] < k:
            raise TooFewPerClass(f'{quality.label} has {counts[quality]} subjects, fewer than {k} folds')

    subjects = sorted(labels)
    y = np.array([int(labels[subject]) for subject in subjects])
    splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=seed)
    assignments = {}
    for fold, (_, test_index) in enumerate(splitter.split(np.zeros(len(subjects)), y)):
        for index in test_index:
            assignments[subjects[index]] = fold
    return FoldPlan(k=k, assignments=assignments, seed=seed)
