""" Gaussian-noise sensitivity sweep of a trained model on one subject """
import logging

from core.labels import PathMode
from fusion.predict import path_decisions
from fusion.rules import decide
from hogm.features import extract_features
from synth.corruptions import corrupt_noise
from synth.quality import psnr_report
from synth.specs import CorruptionKind, CorruptionSpec
from volumes.preprocessing import apply_mask, preprocess_subject

logger = logging.getLogger(__name__)


def noise_sensitivity(mlp, threshold, volume, mask, sigmas, config, seed=0, subject_id='subject', jobs=1):
    """
    Add noise of each sigma to the normalized, standardized volume and decide
    again. PSNR is measured on the unclipped noisy volume against the clean one.
    """
    clean, standard_mask = preprocess_subject(volume, mask, config)
    rows = []
    for sigma in sigmas:
        spec = CorruptionSpec(CorruptionKind.GAUSSIAN_NOISE, sigma, seed=seed)
        report = psnr_report(clean, corrupt_noise(clean, spec, clip=False))
        noisy = apply_mask(corrupt_noise(clean, spec), standard_mask)
        features = extract_features(subject_id, noisy, standard_mask, config, jobs=jobs)
        c_2d, c_3d = path_decisions(mlp, threshold, features)
        decision = decide(c_2d, c_3d, PathMode.FUSED, subject_id)
        logger.info('sigma %.4f: PSNR %.2f dB, final label %d', sigma, report['psnr_unit_max'], decision.c_final)
        rows.append({
            'sigma': float(sigma),
            **report,
            'd_final': features.d_final,
            'c_final': int(decision.c_final),
            'confidence': decision.confidence,
            'c_2d': decision.c_2d.to_dict(),
            'c_3d': decision.c_3d.to_dict(),
        })
    return rows
