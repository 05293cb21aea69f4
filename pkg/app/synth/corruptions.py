""" Controlled degradations: ghost motion, Gaussian noise, Gaussian blur """
import numpy as np
from scipy.ndimage import gaussian_filter

from synth.specs import CorruptionKind

GHOST_WEIGHT = 0.5
GHOST_AXES = (1, 2)


def ghost_shifts(severity):
    """ K = 4 rigid translations: +/- severity voxels along each ghosting axis """
    return [(shift, axis) for axis in GHOST_AXES for shift in (severity, -severity)]


def corrupt_motion(volume, spec):
    """
    (1 - w) v + w * mean of the translated copies. Copies wrap around the field
    of view like phase-encode ghosts. The result is a convex combination, so it
    stays inside the input's value range.
    """
    severity = int(round(spec.severity))
    if severity == 0:
        return volume.evolve(volume.data.copy(), volume.stage)
    copies = [np.roll(volume.data, shift, axis=axis) for shift, axis in ghost_shifts(severity)]
    ghost = np.mean(copies, axis=0)
    data = (1.0 - GHOST_WEIGHT) * volume.data + GHOST_WEIGHT * ghost
    return volume.evolve(np.clip(data, volume.data.min(), volume.data.max()), volume.stage)


def corrupt_noise(volume, spec, clip=True):
    """ Additive zero-mean Gaussian noise of sigma = severity; clipped to [0, 1] unless clip is False """
    if spec.severity == 0:
        return volume.evolve(volume.data.copy(), volume.stage)
    rng = np.random.default_rng(spec.seed)
    data = volume.data + rng.normal(0.0, spec.severity, size=volume.shape)
    if clip:
        data = np.clip(data, 0.0, 1.0)
    return volume.evolve(data, volume.stage)


def corrupt_blur(volume, spec):
    if spec.severity == 0:
        return volume.evolve(volume.data.copy(), volume.stage)
    return volume.evolve(gaussian_filter(volume.data, spec.severity), volume.stage)


CORRUPTIONS = {
    CorruptionKind.GHOST_MOTION: corrupt_motion,
    CorruptionKind.GAUSSIAN_NOISE: corrupt_noise,
    CorruptionKind.GAUSSIAN_BLUR: corrupt_blur,
}


def corrupt(volume, spec):
    return CORRUPTIONS[CorruptionKind(spec.kind)](volume, spec)
