""" Phantom and corruption specifications """
from dataclasses import dataclass

from django.db import models


class Structure(models.TextChoices):
    NESTED_ELLIPSOIDS = 'nested_ellipsoids', 'Nested ellipsoids'
    PERLIN_TEXTURE = 'perlin_texture', 'Textured nested ellipsoids'


class CorruptionKind(models.TextChoices):
    GHOST_MOTION = 'ghost_motion', 'Ghost motion'
    GAUSSIAN_NOISE = 'gaussian_noise', 'Gaussian noise'
    GAUSSIAN_BLUR = 'gaussian_blur', 'Gaussian blur'


@dataclass(frozen=True)
class PhantomSpec:
    shape: tuple = (192, 256, 256)
    seed: int = 0
    structure: str = Structure.PERLIN_TEXTURE
    contrast_levels: tuple = (0.0, 0.45, 0.9)

    def __post_init__(self):
        if len(self.contrast_levels) < 2:
            raise ValueError('A phantom needs at least 2 contrast levels')
        if any(not 0 <= level <= 1 for level in self.contrast_levels):
            raise ValueError('Contrast levels must lie in [0, 1]')
        if len(self.shape) != 3 or min(self.shape) < 8:
            raise ValueError('Phantom shape must be 3D with at least 8 voxels per axis')
        object.__setattr__(self, 'structure', Structure(self.structure))


@dataclass(frozen=True)
class CorruptionSpec:
    """
    severity: displacement in voxels (ghost motion), sigma on [0, 1] intensities
    (noise) or kernel sigma in voxels (blur). Zero is the identity.
    """
    kind: str
    severity: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.severity < 0:
            raise ValueError('Corruption severity must be non-negative')
        object.__setattr__(self, 'kind', CorruptionKind(self.kind))
