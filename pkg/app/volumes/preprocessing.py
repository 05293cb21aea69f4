""" Masking, percentile normalization and shape standardization """
import logging

import numpy as np
from skimage.filters import threshold_otsu

from core.exceptions import DegenerateIntensity, EmptyMask
from core.labels import Stage
from volumes.types import BrainMask

logger = logging.getLogger(__name__)

TARGET_SHAPE = (192, 256, 256)


def apply_mask(volume, mask):
    """ Zero every out-of-mask voxel; in-mask voxels are unchanged """
    mask.check_companion(volume)
    return volume.evolve(np.where(mask.data, volume.data, 0.0), Stage.MASKED)


def fallback_mask(volume):
    """ Brain mask from an Otsu threshold of the raw histogram, for subjects without one """
    if volume.data.min() == volume.data.max():
        raise EmptyMask('Cannot derive a fallback mask from a constant volume')
    threshold = threshold_otsu(volume.data)
    logger.info('Using fallback Otsu mask (threshold %.6g)', threshold)
    return BrainMask(volume.data > threshold, source='fallback')


def percentile_normalize(volume, mask, p_low=1.0, p_high=99.0):
    """
    Clip in-mask intensities to their [p_low, p_high] percentiles and map them
    linearly onto [0, 1]. Percentiles use linear interpolation between order
    statistics.
    """
    mask.check_companion(volume)
    inside = volume.data[mask.data]
    q_low, q_high = np.percentile(inside, [p_low, p_high])
    if q_high <= q_low:
        raise DegenerateIntensity(f'In-mask intensities are constant between percentiles ({q_low:.6g})')

    scaled = (np.clip(volume.data, q_low, q_high) - q_low) / (q_high - q_low)
    return volume.evolve(np.where(mask.data, scaled, 0.0), Stage.NORMALIZED)


def _fit_axis(array, axis, target):
    length = array.shape[axis]
    if length < target:
        before = (target - length) // 2
        pad = [(0, 0)] * array.ndim
        pad[axis] = (before, target - length - before)
        return np.pad(array, pad)
    if length > target:
        start = (length - target) // 2
        return np.take(array, np.arange(start, start + target), axis=axis)
    return array


def fit_to_shape(array, target=TARGET_SHAPE):
    """ Symmetric zero-pad (extra voxel on the high side) or center-crop every axis """
    for axis, size in enumerate(target):
        array = _fit_axis(array, axis, size)
    return array


def standardize_shape(volume, target=TARGET_SHAPE):
    return volume.evolve(fit_to_shape(volume.data, target), Stage.STANDARDIZED)


def standardize_mask(mask, target=TARGET_SHAPE):
    return BrainMask(fit_to_shape(mask.data, target), source=mask.source)


def preprocess_subject(volume, mask, config):
    """ apply_mask -> percentile_normalize -> standardize_shape, mask kept aligned """
    p_low, p_high = config.percentiles
    normalized = percentile_normalize(apply_mask(volume, mask), mask, p_low, p_high)
    target = tuple(config.target_shape)
    return standardize_shape(normalized, target), standardize_mask(mask, target)
