""" Gradient magnitudes of slices and cuboids """
import numpy as np

from core.exceptions import TooSmall


def _magnitude(grid, ndim):
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != ndim:
        raise TooSmall(f'Expected a {ndim}D grid, got {grid.ndim} dimensions')
    if min(grid.shape) < 3:
        raise TooSmall(f'Every axis needs at least 3 samples, got shape {grid.shape}')
    # Central differences inside, one-sided first-order differences on the borders
    components = np.gradient(grid, edge_order=1)
    return np.sqrt(sum(component * component for component in components))


def gradient_magnitude_2d(slice_):
    return _magnitude(slice_, 2)


def gradient_magnitude_3d(cuboid):
    return _magnitude(cuboid, 3)
