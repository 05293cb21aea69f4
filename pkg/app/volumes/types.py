""" Volume, mask and cohort record types """
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from core.exceptions import EmptyMask, NonFiniteVolume, ShapeMismatch
from core.labels import Quality, Stage


@dataclass(frozen=True, eq=False)
class Volume:
    """ A 3D intensity grid with voxel sizes (mm) and its processing stage """
    data: np.ndarray
    voxel_size: tuple = (1.0, 1.0, 1.0)
    stage: str = Stage.RAW

    def __post_init__(self):
        if self.data.ndim != 3:
            raise ShapeMismatch(f'Expected a 3D volume, got {self.data.ndim} dimensions')
        if not np.isfinite(self.data).all():
            raise NonFiniteVolume('Volume contains NaN or infinite intensities')

    @property
    def shape(self):
        return tuple(self.data.shape)

    def evolve(self, data, stage):
        return replace(self, data=data, stage=stage)


@dataclass(frozen=True, eq=False)
class BrainMask:
    """ Boolean brain mask; source is 'file', 'fallback' or 'synthetic' """
    data: np.ndarray
    source: str = 'file'

    def __post_init__(self):
        if self.data.dtype != bool:
            object.__setattr__(self, 'data', self.data.astype(bool))
        if self.data.ndim != 3:
            raise ShapeMismatch(f'Expected a 3D mask, got {self.data.ndim} dimensions')
        if not self.data.any():
            raise EmptyMask('Brain mask has no true voxel')

    @property
    def shape(self):
        return tuple(self.data.shape)

    def check_companion(self, volume):
        if self.shape != volume.shape:
            raise ShapeMismatch(f'Mask shape {self.shape} does not match volume shape {volume.shape}')


@dataclass(frozen=True)
class SubjectRecord:
    subject_id: str
    volume_path: Path
    mask_path: Optional[Path] = None
    label: Optional[Quality] = None
