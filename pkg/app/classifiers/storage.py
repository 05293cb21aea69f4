""" Reading and writing the single-file JSON model """
import logging
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from classifiers.mlp import MlpModel
from classifiers.serializers import ModelFileSerializer
from classifiers.threshold import ThresholdModel
from core.artifacts import artifact_header, read_json, write_json
from core.config import FORMAT_VERSION, FeatureConfig, MlpConfig
from core.exceptions import FeatureConfigMismatch, UnsupportedFormat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelFile:
    mlp: MlpModel
    threshold: ThresholdModel
    feature_config: FeatureConfig
    config: dict = None


def _mlp_section(mlp):
    train_config = asdict(mlp.train_config)
    train_config['layer_sizes'] = list(train_config['layer_sizes'])
    return {
        'layer_sizes': list(mlp.layer_sizes),
        'params': [float(value) for value in mlp.params],
        'input_center': [float(value) for value in mlp.input_center],
        'input_scale': [float(value) for value in mlp.input_scale],
        'train_config': train_config,
        'seed': mlp.train_config.seed,
        'final_loss': float(mlp.final_loss),
    }


def model_document(mlp, threshold, config):
    document = artifact_header(config)
    document.update({
        'mlp': _mlp_section(mlp),
        'threshold': {
            't_star': threshold.t_star,
            'scale': threshold.scale,
            'youden_j': threshold.youden_j,
            'train_distribution_summary': threshold.train_distribution_summary,
        },
        'feature_config': config.feature_config.to_dict(),
    })
    return document


def save_model_file(path, mlp, threshold, config):
    path = write_json(path, model_document(mlp, threshold, config))
    logger.info('Model written to %s', path)
    return path


def load_model_file(path):
    document = read_json(Path(path))
    version = document.get('format_version') if isinstance(document, dict) else None
    if version != FORMAT_VERSION:
        raise UnsupportedFormat(f'{path}: model format_version {version!r} is not supported')

    serializer = ModelFileSerializer(data=document)
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data

    mlp_data = data['mlp']
    train_config = dict(mlp_data['train_config'])
    train_config['layer_sizes'] = tuple(train_config['layer_sizes'])
    mlp = MlpModel(
        layer_sizes=tuple(mlp_data['layer_sizes']),
        params=np.asarray(mlp_data['params'], dtype=np.float64),
        input_center=np.asarray(mlp_data['input_center'], dtype=np.float64),
        input_scale=np.asarray(mlp_data['input_scale'], dtype=np.float64),
        train_config=MlpConfig(**train_config),
        final_loss=mlp_data.get('final_loss') if mlp_data.get('final_loss') is not None else float('nan'),
    )
    threshold_data = data['threshold']
    threshold = ThresholdModel(
        t_star=threshold_data['t_star'],
        scale=threshold_data['scale'],
        youden_j=threshold_data['youden_j'],
        train_distribution_summary=dict(threshold_data['train_distribution_summary']),
    )
    feature = data['feature_config']
    feature_config = FeatureConfig(feature['n_bins'], feature['slice_window'], tuple(feature['cuboid']))
    return ModelFile(mlp, threshold, feature_config, document.get('config'))


def check_feature_config(model_file, feature_config):
    """ Refuse features extracted with settings other than the ones the model was trained on """
    if model_file.feature_config != feature_config:
        raise FeatureConfigMismatch(
            f'Model was trained on features {model_file.feature_config.to_dict()}, '
            f'got features {feature_config.to_dict()}'
        )
