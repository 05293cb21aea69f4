""" Serializers for the model file """
import math

from rest_framework import serializers

from classifiers.mlp import count_params
from core.serializers import FeatureConfigSerializer, MlpConfigSerializer
from core.validators import validate_layer_sizes


class ThresholdValueField(serializers.FloatField):
    """ A float that may be +/-inf (the threshold sentinels), never NaN """

    def to_internal_value(self, data):
        try:
            value = float(data)
        except (TypeError, ValueError):
            self.fail('invalid')
        if math.isnan(value):
            self.fail('invalid')
        return value


class MlpSectionSerializer(serializers.Serializer):
    layer_sizes = serializers.ListField(child=serializers.IntegerField(min_value=1), validators=[validate_layer_sizes])
    params = serializers.ListField(child=serializers.FloatField())
    input_center = serializers.ListField(child=serializers.FloatField())
    input_scale = serializers.ListField(child=serializers.FloatField(min_value=0.0))
    train_config = MlpConfigSerializer()
    seed = serializers.IntegerField(min_value=0)
    final_loss = serializers.FloatField(required=False, allow_null=True)

    def validate(self, data):
        expected = count_params(data['layer_sizes'])
        if len(data['params']) != expected:
            raise serializers.ValidationError(
                {'params': f'Layer sizes {data["layer_sizes"]} need {expected} parameters.'}
            )
        n_inputs = data['layer_sizes'][0]
        if len(data['input_center']) != n_inputs or len(data['input_scale']) != n_inputs:
            raise serializers.ValidationError('Input standardization must have one entry per input.')
        return data


class ThresholdSectionSerializer(serializers.Serializer):
    t_star = ThresholdValueField()
    scale = serializers.FloatField()
    youden_j = serializers.FloatField(required=False, default=0.0)
    train_distribution_summary = serializers.DictField(required=False, default=dict)

    def validate_scale(self, value):
        if not value > 0:
            raise serializers.ValidationError('Scale must be positive.')
        return value


class ModelFileSerializer(serializers.Serializer):
    """ Serializer for a trained model document """
    format_version = serializers.IntegerField()
    tool_version = serializers.CharField(required=False)
    config = serializers.DictField(required=False)
    mlp = MlpSectionSerializer()
    threshold = ThresholdSectionSerializer()
    feature_config = FeatureConfigSerializer()
