"""
Per-subject workers run by the management commands.

Workers are module-level functions taking one picklable task so the batch
runner can ship them to worker processes.
"""
import logging
from pathlib import Path

import numpy as np

from core.exceptions import ShapeMismatch
from hogm.features import extract_features
from volumes.nifti import load_mask, load_volume, save_mask, save_volume
from volumes.preprocessing import apply_mask, fallback_mask, preprocess_subject
from volumes.types import SubjectRecord

logger = logging.getLogger(__name__)


def load_subject(record):
    """ Volume and brain mask of a manifest record; an Otsu mask stands in for a missing one """
    volume = load_volume(record.volume_path)
    mask = load_mask(record.mask_path) if record.mask_path else fallback_mask(volume)
    mask.check_companion(volume)
    return volume, mask


def preprocess_worker(task):
    """ task: (record, config, out_dir); returns the record of the standardized files """
    record, config, out_dir = task
    volume, mask = load_subject(record)
    standard, standard_mask = preprocess_subject(volume, mask, config)
    out_dir = Path(out_dir)
    volume_path = save_volume(standard, out_dir / f'{record.subject_id}.nii.gz', dtype=np.float32)
    mask_path = save_mask(standard_mask, out_dir / f'{record.subject_id}_mask.nii.gz', standard.voxel_size)
    logger.debug('Standardized %s to %s', record.subject_id, volume_path)
    return SubjectRecord(record.subject_id, volume_path, mask_path, record.label)


def features_worker(task):
    """
    task: (record, config, preprocess, jobs). Without preprocess the volume must
    already be standardized (output of the preprocess command).
    """
    record, config, preprocess, jobs = task
    volume, mask = load_subject(record)
    if preprocess:
        volume, mask = preprocess_subject(volume, mask, config)
    elif volume.shape != tuple(config.target_shape):
        raise ShapeMismatch(
            f'{record.subject_id}: volume shape {volume.shape} is not the target shape '
            f'{tuple(config.target_shape)}; run preprocess first or pass --preprocess'
        )
    else:
        volume = apply_mask(volume, mask)
    return extract_features(record.subject_id, volume, mask, config, jobs=jobs)


def split_jobs(jobs, n_subjects):
    """ (subject workers, threads per volume) for a total of jobs workers """
    jobs = max(1, jobs)
    subject_jobs = max(1, min(jobs, n_subjects))
    return subject_jobs, max(1, jobs // subject_jobs)
