""" NIfTI-1 reading and writing (single-file .nii / .nii.gz) """
import logging
import zlib
from pathlib import Path

import nibabel as nib
import numpy as np
from nibabel.filebasedimages import ImageFileError
from nibabel.spatialimages import HeaderDataError

from core.exceptions import MalformedHeader, UnreadableFile, UnsupportedDatatype
from core.labels import Stage
from volumes.types import BrainMask, Volume

logger = logging.getLogger(__name__)

NIFTI_SUFFIXES = ('.nii', '.nii.gz')


def _read_image(path):
    path = Path(path)
    if not path.is_file():
        raise UnreadableFile(f'{path}: no such file')
    if not path.name.endswith(NIFTI_SUFFIXES):
        raise MalformedHeader(f'{path}: only single-file NIfTI-1 (.nii, .nii.gz) is supported')
    try:
        image = nib.Nifti1Image.from_filename(str(path))
    except (HeaderDataError, ImageFileError) as exc:
        raise MalformedHeader(f'{path}: {exc}') from exc
    except (OSError, EOFError, zlib.error) as exc:
        raise UnreadableFile(f'{path}: {exc}') from exc

    header = image.header
    # Nifti2 and analyze-pair headers are rejected here
    if header['sizeof_hdr'] != 348 or header['magic'].item() != b'n+1':
        raise MalformedHeader(f'{path}: not a single-file NIfTI-1 image')
    if header['dim'][0] != 3:
        raise MalformedHeader(f'{path}: expected dim[0] = 3, got {header["dim"][0]}')
    dtype = header.get_data_dtype()
    if dtype.kind == 'c' or dtype.names is not None:
        raise UnsupportedDatatype(f'{path}: voxel type {dtype} is not a real scalar')
    return image


def _read_data(image, path):
    try:
        # get_fdata applies scl_slope / scl_inter when they are set
        return image.get_fdata(dtype=np.float64)
    except (OSError, EOFError, ValueError, zlib.error) as exc:
        raise UnreadableFile(f'{path}: {exc}') from exc


def load_volume(path):
    """ Load a NIfTI-1 volume as a Raw-stage Volume of float64 intensities """
    image = _read_image(path)
    data = _read_data(image, path)
    voxel_size = tuple(float(zoom) for zoom in image.header.get_zooms()[:3])
    logger.debug('Loaded %s with shape %s', path, data.shape)
    return Volume(data=data, voxel_size=voxel_size, stage=Stage.RAW)


def load_mask(path):
    image = _read_image(path)
    return BrainMask(_read_data(image, path) != 0, source='file')


def save_volume(volume, path, dtype=None):
    """
    Write a Volume as NIfTI-1; the file is gzip-compressed when the name ends in .gz.
    Integer dtypes are written without scaling so the data round-trips exactly.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = volume.data if dtype is None else volume.data.astype(dtype)
    affine = np.diag([*volume.voxel_size, 1.0])
    image = nib.Nifti1Image(data, affine)
    image.header.set_data_dtype(data.dtype)
    image.header.set_zooms(volume.voxel_size)
    nib.save(image, str(path))
    return path


def save_mask(mask, path, voxel_size=(1.0, 1.0, 1.0)):
    return save_volume(Volume(mask.data.astype(np.uint8), voxel_size), path)
