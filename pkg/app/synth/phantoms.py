""" Synthetic brain-like phantoms """
import numpy as np
from scipy.ndimage import gaussian_filter

from core.labels import Stage
from synth.specs import PhantomSpec, Structure
from volumes.types import BrainMask, Volume

OUTER_RADIUS = 0.42
# Each nested level shrinks the ellipsoid by this share of the outer radius
LEVEL_STEP = 0.6
TEXTURE_OCTAVES = ((8.0, 1.0), (4.0, 0.5), (2.0, 0.25))
# Texture gradients stay below 1% of the steepest boundary gradient, i.e. in the first HoGM bin
TEXTURE_AMPLITUDE = 1e-4
# Partial-volume width in voxels; ghost shifts up to 4 widths keep merged, monotone edge profiles
BOUNDARY_SIGMA = 2.0


def _ellipsoid(grid, center, radii):
    return sum(((axis - c) / r) ** 2 for axis, c, r in zip(grid, center, radii)) <= 1.0


def nested_levels(spec, rng):
    """ Piecewise-constant image: level k fills the k-th nested ellipsoid; outer ellipsoid is the mask """
    shape = np.asarray(spec.shape, dtype=np.float64)
    grid = np.ogrid[tuple(slice(0, n) for n in spec.shape)]
    center = (shape - 1) / 2 + rng.uniform(-0.02, 0.02, size=3) * shape
    radii = OUTER_RADIUS * shape * rng.uniform(0.92, 1.0, size=3)

    image = np.zeros(spec.shape)
    n_levels = len(spec.contrast_levels)
    mask = None
    for k, level in enumerate(spec.contrast_levels):
        factor = 1.0 - LEVEL_STEP * k / n_levels
        offset = rng.uniform(-0.03, 0.03, size=3) * radii * (k > 0)
        region = _ellipsoid(grid, center + offset, radii * factor)
        if mask is None:
            mask = region
        image[region] = level
    return image, mask


def fractal_texture(shape, rng):
    """ Multi-octave smoothed Gaussian noise with unit standard deviation """
    texture = np.zeros(shape)
    for sigma, weight in TEXTURE_OCTAVES:
        octave = gaussian_filter(rng.standard_normal(shape), sigma, mode='wrap')
        texture += weight * octave / octave.std()
    return texture / texture.std()


def make_phantom(spec=None):
    """
    Returns (Volume, BrainMask); intensities in [0, 1], bit-identical for a given spec.

    With the default levels the outermost compartment is a dark shell, so the
    1st percentile inside the mask stays at 0 under every corruption.
    """
    spec = spec or PhantomSpec()
    rng = np.random.default_rng(spec.seed)
    image, mask = nested_levels(spec, rng)

    if spec.structure == Structure.PERLIN_TEXTURE:
        image = gaussian_filter(image, BOUNDARY_SIGMA) * mask
        image = image * (1.0 + TEXTURE_AMPLITUDE * fractal_texture(spec.shape, rng))
        image = np.clip(image, 0.0, 1.0) * mask

    return Volume(image, stage=Stage.RAW), BrainMask(mask, source='synthetic')
