""" Label and mode choices shared by all apps """
from django.db import models


class Quality(models.IntegerChoices):
    GOOD = 1, 'Good quality'
    POOR = 2, 'Poor quality'


class PathLabel(models.IntegerChoices):
    UNSCORABLE = 0, 'Unscorable'
    GOOD = 1, 'Good quality'
    POOR = 2, 'Poor quality'


class PathMode(models.TextChoices):
    TWO_D = '2d', '2D slices only'
    THREE_D = '3d', '3D cuboids only'
    FUSED = 'fused', 'AND fusion of both paths'


class Stage(models.TextChoices):
    RAW = 'raw', 'Raw'
    MASKED = 'masked', 'Masked'
    NORMALIZED = 'normalized', 'Normalized'
    STANDARDIZED = 'standardized', 'Standardized'
