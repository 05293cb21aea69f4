""" Validators for pipeline configuration values """
from rest_framework import serializers


def validate_positive_shape(shape):
    if any(int(axis) <= 0 for axis in shape):
        raise serializers.ValidationError('Every axis must be a positive voxel count.')


def validate_percentiles(percentiles):
    p_low, p_high = percentiles
    if not 0 <= p_low < p_high <= 100:
        raise serializers.ValidationError('Percentiles must satisfy 0 <= p_low < p_high <= 100.')


def validate_layer_sizes(layer_sizes):
    if len(layer_sizes) < 2 or layer_sizes[0] != 3 or layer_sizes[-1] != 1:
        raise serializers.ValidationError('The MLP takes a slice triplet (3 inputs) and has one sigmoid output.')
    if any(size <= 0 for size in layer_sizes):
        raise serializers.ValidationError('Layer sizes must be positive.')
