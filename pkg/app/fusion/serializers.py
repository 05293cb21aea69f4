""" Serializers for decision lines """
from rest_framework import serializers

from core.labels import Quality


class PathDecisionSerializer(serializers.Serializer):
    label = serializers.ChoiceField(choices=[1, 2], allow_null=True)
    p_c1 = serializers.FloatField(min_value=0.0, max_value=1.0, allow_null=True)
    p_c2 = serializers.FloatField(min_value=0.0, max_value=1.0, allow_null=True)

    def validate(self, data):
        if data['label'] is None and (data['p_c1'] is not None or data['p_c2'] is not None):
            raise serializers.ValidationError('An unscorable path carries no probabilities.')
        if data['label'] is not None and (data['p_c1'] is None or data['p_c2'] is None):
            raise serializers.ValidationError('A scorable path needs both probabilities.')
        return data


class QualityDecisionSerializer(serializers.Serializer):
    """ Serializer for one line of a decisions file """
    subject_id = serializers.CharField()
    c_2d = PathDecisionSerializer()
    c_3d = PathDecisionSerializer()
    c_final = serializers.ChoiceField(choices=Quality.values)
    confidence = serializers.FloatField(min_value=0.0, max_value=1.0)
    confidence_kind = serializers.ChoiceField(choices=['P1', 'P2'])
    degraded_evidence = serializers.BooleanField()

    def validate(self, data):
        expected = 'P1' if data['c_final'] == Quality.GOOD else 'P2'
        if data['confidence_kind'] != expected:
            raise serializers.ValidationError({'confidence_kind': f'Final class {data["c_final"]} reports {expected}.'})
        return data
