""" Peak signal-to-noise ratio """
import math

import numpy as np

from core.exceptions import DegenerateIntensity, ShapeMismatch


def psnr(reference, test, max_value=1.0):
    """ 10 log10(MAX^2 / MSE) in dB; identical volumes give +inf """
    if reference.shape != test.shape:
        raise ShapeMismatch(f'PSNR needs equal shapes, got {reference.shape} and {test.shape}')
    if reference.data.max() <= 0:
        raise DegenerateIntensity('PSNR reference has no positive intensity')
    mse = float(np.mean((reference.data - test.data) ** 2))
    if mse == 0:
        return math.inf
    return 10 * math.log10(max_value ** 2 / mse)


def psnr_report(reference, test):
    """ Both conventions: MAX = 1 for normalized volumes, and MAX = peak of the reference """
    return {
        'psnr_unit_max': psnr(reference, test, 1.0),
        'psnr_peak_max': psnr(reference, test, float(reference.data.max())),
    }
