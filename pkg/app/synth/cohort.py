""" Synthetic cohorts written as NIfTI files plus a manifest """
import logging
from pathlib import Path

import numpy as np

from core.labels import Quality
from synth.corruptions import corrupt
from synth.phantoms import make_phantom
from synth.specs import CorruptionKind, CorruptionSpec, PhantomSpec, Structure
from volumes.manifest import write_manifest
from volumes.nifti import save_mask, save_volume
from volumes.types import SubjectRecord

logger = logging.getLogger(__name__)


def label_for(severity, cutoff):
    """ Clean phantoms are Good, corruptions at or above the cutoff Poor, the rest unlabeled """
    if severity == 0:
        return Quality.GOOD
    if severity >= cutoff:
        return Quality.POOR
    return None


def simulate_cohort(out_dir, n_subjects=20, severities=(0, 8), cutoff=4, seed=0, shape=(192, 256, 256),
                    kind=CorruptionKind.GHOST_MOTION, structure=Structure.PERLIN_TEXTURE):
    """
    One phantom per subject; for every severity a variant is written (severity 0
    is the clean phantom). Returns the manifest path.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records = []
    for index in range(n_subjects):
        phantom_seed = seed + index
        phantom, mask = make_phantom(PhantomSpec(shape=tuple(shape), seed=phantom_seed, structure=structure))
        name = f'phantom-{index + 1:03d}'
        mask_path = save_mask(mask, out_dir / f'{name}_mask.nii.gz')
        for severity in severities:
            variant = corrupt(phantom, CorruptionSpec(kind, severity, seed=phantom_seed))
            suffix = 'clean' if severity == 0 else f'{CorruptionKind(kind).value}-{severity:g}'
            volume_path = save_volume(variant, out_dir / f'{name}_{suffix}.nii.gz', dtype=np.float32)
            records.append(SubjectRecord(
                subject_id=f'{name}_{suffix}',
                volume_path=volume_path,
                mask_path=mask_path,
                label=label_for(severity, cutoff),
            ))
        logger.info('Phantom %s written with %d variant(s)', name, len(severities))
    return write_manifest(records, out_dir / 'manifest.csv')
