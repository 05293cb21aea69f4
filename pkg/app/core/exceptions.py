""" Errors raised by the pipeline """


class DhogmError(Exception):
    """ Base class for every pipeline error """


# Volume I/O
class UnreadableFile(DhogmError):
    pass


class MalformedHeader(DhogmError):
    pass


class UnsupportedDatatype(DhogmError):
    pass


class NonFiniteVolume(DhogmError):
    pass


class ShapeMismatch(DhogmError):
    pass


class EmptyMask(DhogmError):
    pass


class DegenerateIntensity(DhogmError):
    pass


# Feature extraction
class TooSmall(DhogmError):
    pass


class AllZeroGradient(DhogmError):
    """ Uniform slice or cuboid: no positive gradient magnitude to histogram """


class TooFewBins(DhogmError):
    pass


class AllCuboidsDegenerate(DhogmError):
    pass


# Classifiers and fusion
class NonFiniteInput(DhogmError):
    pass


class NonFiniteFeature(DhogmError):
    pass


class InsufficientData(DhogmError):
    pass


class ClassMissing(InsufficientData):
    pass


class BothUnscorable(DhogmError):
    pass


class FeatureConfigMismatch(DhogmError):
    pass


class UnsupportedFormat(DhogmError):
    pass


# Evaluation
class EmptyMatrix(DhogmError):
    pass


class TooFewPerClass(DhogmError):
    pass


class IdMismatch(DhogmError):
    pass


# Units of a path (slices or cuboids) that cannot produce a slope value
DEGENERATE_UNIT_ERRORS = (AllZeroGradient, TooFewBins)
