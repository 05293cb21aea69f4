""" Slice-level DHoGM triplets (axial, coronal, sagittal) """
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from core.exceptions import DEGENERATE_UNIT_ERRORS, ShapeMismatch
from hogm.gradients import gradient_magnitude_2d
from hogm.histograms import slope_of

SLICE_WINDOW = 60
ORIENTATIONS = ('ax', 'cor', 'sag')


@dataclass(frozen=True, eq=False)
class SliceFeatureSeries:
    """
    triplets[i] = (D_ax, D_cor, D_sag) of the i-th selected slice of each axis.
    A triplet with any degenerate slice holds NaN and is flagged in `degenerate`.
    """
    triplets: np.ndarray
    slice_indices: np.ndarray

    @property
    def degenerate(self):
        return ~np.isfinite(self.triplets).all(axis=1)

    @property
    def n_degenerate(self):
        return int(self.degenerate.sum())

    @property
    def valid_triplets(self):
        return self.triplets[~self.degenerate]

    def __len__(self):
        return len(self.triplets)


def select_slices(shape, window=SLICE_WINDOW):
    """ A contiguous window of slices centered on each axis midpoint: center - w/2 .. center + w/2 - 1 """
    selections = []
    for axis, length in enumerate(shape):
        if length < window:
            raise ShapeMismatch(f'Axis {axis} has {length} slices, fewer than the window of {window}')
        start = length // 2 - window // 2
        selections.append(np.arange(start, start + window))
    return selections


def _slice_slope(data, mask, axis, index, n_bins):
    plane = np.take(data, index, axis=axis)
    plane_mask = np.take(mask, index, axis=axis)
    magnitudes = gradient_magnitude_2d(plane)
    try:
        return slope_of(magnitudes[plane_mask], n_bins)
    except DEGENERATE_UNIT_ERRORS:
        return np.nan


def slice_features(volume, mask, n_bins=100, window=SLICE_WINDOW, jobs=1):
    """ Build the per-slice DHoGM triplets from the masked, standardized volume """
    mask.check_companion(volume)
    selections = select_slices(volume.shape, window)
    tasks = [(axis, int(index)) for axis in range(3) for index in selections[axis]]

    def run(task):
        return _slice_slope(volume.data, mask.data, task[0], task[1], n_bins)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            values = list(executor.map(run, tasks))
    else:
        values = [run(task) for task in tasks]

    triplets = np.asarray(values, dtype=np.float64).reshape(3, window).T
    triplets[~np.isfinite(triplets).all(axis=1)] = np.nan
    return SliceFeatureSeries(triplets=triplets, slice_indices=np.stack(selections))
