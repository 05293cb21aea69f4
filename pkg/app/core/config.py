""" Resolved pipeline configuration """
import copy
import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from django.conf import settings

FORMAT_VERSION = 1


@dataclass(frozen=True)
class MlpConfig:
    layer_sizes: tuple = (3, 10, 14, 1)
    learning_rate: float = 0.05
    epochs: int = 2000
    init_scale: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class FeatureConfig:
    """ The extraction settings a trained model depends on """
    n_bins: int
    slice_window: int
    cuboid: tuple

    def to_dict(self):
        return {'n_bins': self.n_bins, 'slice_window': self.slice_window, 'cuboid': list(self.cuboid)}


@dataclass(frozen=True)
class PipelineConfig:
    n_bins: int = 100
    slice_window: int = 60
    cuboid_shape: tuple = (96, 128, 128)
    target_shape: tuple = (192, 256, 256)
    percentiles: tuple = (1.0, 99.0)
    path_mode: str = 'fused'
    mlp: MlpConfig = field(default_factory=MlpConfig)

    @property
    def feature_config(self):
        return FeatureConfig(self.n_bins, self.slice_window, tuple(self.cuboid_shape))

    def with_overrides(self, seed=None, path_mode=None):
        """ Return a copy with command-line flags applied """
        config = self
        if seed is not None:
            config = replace(config, mlp=replace(config.mlp, seed=seed))
        if path_mode is not None:
            config = replace(config, path_mode=path_mode)
        return config

    def to_dict(self):
        data = asdict(self)
        for key in ('cuboid_shape', 'target_shape', 'percentiles'):
            data[key] = list(data[key])
        data['mlp']['layer_sizes'] = list(data['mlp']['layer_sizes'])
        return data

    @classmethod
    def from_dict(cls, data):
        """ Validate a (possibly partial) config document and build the config """
        # Imported here: serializers import this module for the defaults
        from core.serializers import PipelineConfigSerializer

        merged = _merge(default_config_dict(), data)
        serializer = PipelineConfigSerializer(data=merged)
        serializer.is_valid(raise_exception=True)
        return serializer.save()


def default_config_dict():
    return copy.deepcopy(settings.DHOGM_PIPELINE)


def _merge(base, override):
    merged = dict(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config_file(path):
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


def resolve_config(config_file=None, seed=None, path_mode=None):
    """ settings -> DHOGM_CONFIG file -> --config file -> flags """
    document = {}
    for candidate in (settings.DHOGM_CONFIG_FILE, config_file):
        if candidate:
            document = _merge(document, load_config_file(Path(candidate)))
    return PipelineConfig.from_dict(document).with_overrides(seed=seed, path_mode=path_mode)
