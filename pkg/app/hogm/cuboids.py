""" Overlapping cuboid grid and volume-level DHoGM (D_3D, D_final) """
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from core.exceptions import DEGENERATE_UNIT_ERRORS, AllCuboidsDegenerate, ShapeMismatch
from hogm.gradients import gradient_magnitude_3d
from hogm.histograms import slope_of

CUBOID_SHAPE = (96, 128, 128)
TARGET_SHAPE = (192, 256, 256)
STARTS_PER_AXIS = 3


@dataclass(frozen=True, eq=False)
class CuboidFeatureSet:
    """ D_3D per cuboid (NaN when degenerate) and their mean over scorable cuboids """
    d3d_values: np.ndarray
    d_final: float
    cuboid_origins: tuple

    @property
    def degenerate(self):
        return ~np.isfinite(self.d3d_values)

    @property
    def n_degenerate(self):
        return int(self.degenerate.sum())

    def __len__(self):
        return len(self.d3d_values)


def axis_starts(length, extent):
    """ Three evenly spaced starts {0, (L - c) / 2, L - c}, rounded half up """
    return [int(math.floor(k * (length - extent) / 2 + 0.5)) for k in range(STARTS_PER_AXIS)]


def cuboid_grid(shape, cuboid=CUBOID_SHAPE, target=TARGET_SHAPE):
    """
    Origins of the 3 x 3 x 3 cuboid grid. With the default geometry adjacent
    cuboids overlap by half their extent.
    """
    if tuple(shape) != tuple(target):
        raise ShapeMismatch(f'Cuboid grid needs the standardized shape {tuple(target)}, got {tuple(shape)}')
    if any(c > length for c, length in zip(cuboid, shape)):
        raise ShapeMismatch(f'Cuboid {tuple(cuboid)} does not fit in {tuple(shape)}')
    starts = [axis_starts(length, extent) for length, extent in zip(shape, cuboid)]
    return tuple(itertools.product(*starts))


def _cuboid_slope(data, origin, cuboid, n_bins):
    region = tuple(slice(start, start + extent) for start, extent in zip(origin, cuboid))
    try:
        return slope_of(gradient_magnitude_3d(data[region]), n_bins)
    except DEGENERATE_UNIT_ERRORS:
        return np.nan


def cuboid_features(volume, n_bins=100, cuboid=CUBOID_SHAPE, target=TARGET_SHAPE, jobs=1):
    origins = cuboid_grid(volume.shape, cuboid, target)

    def run(origin):
        return _cuboid_slope(volume.data, origin, cuboid, n_bins)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            values = np.asarray(list(executor.map(run, origins)), dtype=np.float64)
    else:
        values = np.asarray([run(origin) for origin in origins], dtype=np.float64)

    scorable = values[np.isfinite(values)]
    if scorable.size == 0:
        raise AllCuboidsDegenerate(f'None of the {len(origins)} cuboids has a usable gradient histogram')
    # fsum: exactly rounded, independent of evaluation order
    d_final = math.fsum(scorable.tolist()) / scorable.size
    return CuboidFeatureSet(d3d_values=values, d_final=d_final, cuboid_origins=origins)
