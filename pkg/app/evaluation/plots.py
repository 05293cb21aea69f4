""" Histogram of training D_final by class with the fitted threshold """
from pathlib import Path

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from core.labels import Quality  # noqa: E402

SVG_RC = {'svg.hashsalt': 'dhogm', 'svg.fonttype': 'path'}


def plot_threshold_histogram(d_finals, labels, t_star, path, bins=20):
    """ Writes a deterministic SVG (fixed hash salt, no date metadata) """
    d_finals = np.asarray(d_finals, dtype=np.float64)
    labels = np.asarray([int(label) for label in labels])
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    edges = np.histogram_bin_edges(d_finals, bins=bins)

    with plt.rc_context(SVG_RC):
        figure, axes = plt.subplots(figsize=(6, 4))
        for quality, color in ((Quality.GOOD, 'tab:blue'), (Quality.POOR, 'tab:red')):
            axes.hist(d_finals[labels == quality], bins=edges, alpha=0.6, color=color, label=quality.label)
        if np.isfinite(t_star):
            axes.axvline(t_star, color='black', linestyle='--', label=f't* = {t_star:.4f}')
        axes.set_xlabel('D_final')
        axes.set_ylabel('subjects')
        axes.legend()
        figure.tight_layout()
        figure.savefig(path, format='svg', metadata={'Date': None})
        plt.close(figure)
    return path
