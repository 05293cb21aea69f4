""" Histograms of gradient magnitude (HoGM) and the DHoGM slope """
from dataclasses import dataclass

import numpy as np

from core.exceptions import AllZeroGradient, TooFewBins

SLOPE_BINS = 5


@dataclass(frozen=True, eq=False)
class HogmHistogram:
    """
    Counts of positive gradient magnitudes over uniform bins of (0, max].

    Leading empty bins are dropped: h(1) is the first non-empty bin.
    """
    counts: np.ndarray
    bin_width: float
    first_bin_lower_edge: float

    @property
    def n_bins(self):
        return len(self.counts)

    def h(self, n):
        """ 1-based bin count """
        return int(self.counts[n - 1])


def build_hogm(magnitudes, n_bins=100):
    if n_bins < 1:
        raise ValueError('n_bins must be positive')
    magnitudes = np.asarray(magnitudes, dtype=np.float64).ravel()
    positive = magnitudes[magnitudes > 0]
    if positive.size == 0:
        raise AllZeroGradient('No positive gradient magnitude')

    top = positive.max()
    edges = np.linspace(0.0, top, n_bins + 1)
    # right=True gives right-closed bins (edges[i], edges[i + 1]]
    index = np.digitize(positive, edges[1:-1], right=True)
    counts = np.bincount(index, minlength=n_bins).astype(np.int64)

    first = int(np.flatnonzero(counts)[0])
    return HogmHistogram(counts=counts[first:], bin_width=top / n_bins, first_bin_lower_edge=float(edges[first]))


def dhogm_slope(histogram):
    """ D = sum_{n=2..5} (h[n] - h[n-1]) / h[1], which telescopes to (h[5] - h[1]) / h[1] """
    if histogram.n_bins < SLOPE_BINS:
        raise TooFewBins(f'DHoGM needs {SLOPE_BINS} bins after the first non-empty one, got {histogram.n_bins}')
    head = histogram.counts[:SLOPE_BINS]
    # integer sum, so the result equals the telescoped form exactly
    rise = int(np.diff(head).sum())
    return rise / int(head[0])


def slope_of(magnitudes, n_bins=100):
    return dhogm_slope(build_hogm(magnitudes, n_bins))
