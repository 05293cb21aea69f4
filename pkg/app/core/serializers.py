""" Serializers for the pipeline configuration document """
from rest_framework import serializers

from core.config import MlpConfig, PipelineConfig
from core.labels import PathMode
from core.validators import validate_layer_sizes, validate_percentiles, validate_positive_shape


def shape_field(**kwargs):
    return serializers.ListField(
        child=serializers.IntegerField(), min_length=3, max_length=3,
        validators=[validate_positive_shape], **kwargs
    )


class MlpConfigSerializer(serializers.Serializer):
    """ Training hyperparameters of the slice MLP """
    layer_sizes = serializers.ListField(child=serializers.IntegerField(), validators=[validate_layer_sizes])
    learning_rate = serializers.FloatField(min_value=0.0)
    epochs = serializers.IntegerField(min_value=1)
    init_scale = serializers.FloatField(min_value=0.0)
    seed = serializers.IntegerField(min_value=0)


class PipelineConfigSerializer(serializers.Serializer):
    """ Serializer for the resolved PipelineConfig """
    n_bins = serializers.IntegerField(min_value=6)
    slice_window = serializers.IntegerField(min_value=1)
    cuboid_shape = shape_field()
    target_shape = shape_field()
    percentiles = serializers.ListField(
        child=serializers.FloatField(), min_length=2, max_length=2, validators=[validate_percentiles]
    )
    path_mode = serializers.ChoiceField(choices=PathMode.choices)
    mlp = MlpConfigSerializer()

    def validate(self, data):
        target = data['target_shape']
        if data['slice_window'] > min(target):
            raise serializers.ValidationError({'slice_window': 'The slice window must fit inside every target axis.'})
        if any(c > t for c, t in zip(data['cuboid_shape'], target)):
            raise serializers.ValidationError({'cuboid_shape': 'Cuboids must fit inside the target shape.'})
        return data

    def create(self, validated_data):
        mlp = dict(validated_data.pop('mlp'))
        mlp['layer_sizes'] = tuple(mlp['layer_sizes'])
        return PipelineConfig(
            n_bins=validated_data['n_bins'],
            slice_window=validated_data['slice_window'],
            cuboid_shape=tuple(validated_data['cuboid_shape']),
            target_shape=tuple(validated_data['target_shape']),
            percentiles=tuple(validated_data['percentiles']),
            path_mode=validated_data['path_mode'],
            mlp=MlpConfig(**mlp),
        )


class FeatureConfigSerializer(serializers.Serializer):
    """ The part of the config recorded in model files and feature tables """
    n_bins = serializers.IntegerField(min_value=1)
    slice_window = serializers.IntegerField(min_value=1)
    cuboid = shape_field()
