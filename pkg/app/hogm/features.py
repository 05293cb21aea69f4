""" Per-subject feature extraction and the cohort feature table """
import io
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from core.artifacts import artifact_header
from core.config import FeatureConfig
from core.exceptions import AllCuboidsDegenerate, UnsupportedFormat
from core.serializers import FeatureConfigSerializer
from hogm.cuboids import CuboidFeatureSet, cuboid_features, cuboid_grid
from hogm.slices import ORIENTATIONS, SliceFeatureSeries, select_slices, slice_features

logger = logging.getLogger(__name__)

HEADER_PREFIX = '# dhogm-features '


@dataclass(frozen=True, eq=False)
class SubjectFeatures:
    subject_id: str
    slices: SliceFeatureSeries
    cuboids: Optional[CuboidFeatureSet]
    n_cuboids: int

    @property
    def d_final(self):
        return self.cuboids.d_final if self.cuboids is not None else np.nan

    @property
    def n_degenerate_cuboids(self):
        return self.cuboids.n_degenerate if self.cuboids is not None else self.n_cuboids


def extract_features(subject_id, volume, mask, config, jobs=1):
    """ Both paths' features for one standardized, masked subject """
    n_cuboids = len(cuboid_grid(volume.shape, config.cuboid_shape, config.target_shape))
    slices = slice_features(volume, mask, config.n_bins, config.slice_window, jobs=jobs)
    try:
        cuboids = cuboid_features(volume, config.n_bins, config.cuboid_shape, config.target_shape, jobs=jobs)
    except AllCuboidsDegenerate as exc:
        logger.warning('Subject %s: %s', subject_id, exc)
        cuboids = None
    logger.debug('Subject %s: %d degenerate slices, D_final %s', subject_id, slices.n_degenerate,
                 cuboids.d_final if cuboids else 'n/a')
    return SubjectFeatures(subject_id, slices, cuboids, n_cuboids)


def feature_columns(n_cuboids, window):
    columns = ['subject_id', 'd_final']
    columns += [f'd3d_{i:02d}' for i in range(1, n_cuboids + 1)]
    for orientation in ORIENTATIONS:
        columns += [f'd{orientation}_{i:02d}' for i in range(1, window + 1)]
    return columns + ['n_degenerate_cuboids', 'n_degenerate_slices']


def _row(features):
    row = {'subject_id': features.subject_id, 'd_final': features.d_final}
    d3d = features.cuboids.d3d_values if features.cuboids is not None else np.full(features.n_cuboids, np.nan)
    row.update({f'd3d_{i:02d}': value for i, value in enumerate(d3d, start=1)})
    for column, orientation in enumerate(ORIENTATIONS):
        series = features.slices.triplets[:, column]
        row.update({f'd{orientation}_{i:02d}': value for i, value in enumerate(series, start=1)})
    row['n_degenerate_cuboids'] = features.n_degenerate_cuboids
    row['n_degenerate_slices'] = features.slices.n_degenerate
    return row


def write_feature_table(features, path, config):
    """ One row per subject, sorted by subject_id, behind a JSON header line """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n_cuboids = len(cuboid_grid(config.target_shape, config.cuboid_shape, config.target_shape))
    table = pd.DataFrame(
        [_row(item) for item in sorted(features, key=lambda item: item.subject_id)],
        columns=feature_columns(n_cuboids, config.slice_window),
    )
    header = artifact_header(config)
    header['feature_config'] = config.feature_config.to_dict()
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(HEADER_PREFIX + json.dumps(header, sort_keys=True) + '\n')
        table.to_csv(handle, index=False, float_format='%.17g', na_rep='NaN', lineterminator='\n')
    return path


def _parse_header(line, path):
    if not line.startswith(HEADER_PREFIX):
        raise UnsupportedFormat(f'{path}: missing feature table header line')
    header = json.loads(line[len(HEADER_PREFIX):])
    serializer = FeatureConfigSerializer(data=header.get('feature_config'))
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data
    return FeatureConfig(data['n_bins'], data['slice_window'], tuple(data['cuboid']))


def read_feature_table(path):
    """ Returns ({subject_id: SubjectFeatures}, FeatureConfig) """
    path = Path(path)
    with open(path, encoding='utf-8') as handle:
        feature_config = _parse_header(handle.readline().rstrip('\n'), path)
        table = pd.read_csv(io.StringIO(handle.read()), dtype={'subject_id': str}, float_precision='round_trip')

    window = feature_config.slice_window
    d3d_columns = [column for column in table.columns if column.startswith('d3d_')]
    slice_columns = [[f'd{orientation}_{i:02d}' for i in range(1, window + 1)] for orientation in ORIENTATIONS]
    missing = [column for group in slice_columns for column in group if column not in table.columns]
    if missing:
        raise UnsupportedFormat(f'{path}: missing slice columns such as {missing[0]}')

    features = {}
    for _, row in table.iterrows():
        triplets = np.stack([row[group].to_numpy(dtype=np.float64) for group in slice_columns], axis=1)
        # slice positions are not stored; the window is centered so they are implied by the config
        slices = SliceFeatureSeries(triplets=triplets, slice_indices=np.empty((3, 0), dtype=int))
        d3d = row[d3d_columns].to_numpy(dtype=np.float64)
        cuboids = None
        if np.isfinite(row['d_final']):
            cuboids = CuboidFeatureSet(d3d_values=d3d, d_final=float(row['d_final']), cuboid_origins=())
        features[row['subject_id']] = SubjectFeatures(row['subject_id'], slices, cuboids, len(d3d_columns))
    return features, feature_config


__all__ = [
    'SubjectFeatures', 'extract_features', 'feature_columns', 'read_feature_table',
    'select_slices', 'write_feature_table',
]
