"""Online mean/variance accumulation (Welford) for batches of samples."""

import numpy as np


class RunningMoments:
    """Tracks per-feature mean and variance of streamed sample batches.

    Uses the parallel variant of Welford's update, so whole batches can be
    merged at once without storing history. Variance uses ddof=1.
    """

    def __init__(self, n_features):
        self.count = 0
        self.mean = np.zeros(n_features)
        self._m2 = np.zeros(n_features)

    def update(self, batch):
        """Merge a ``(b, n_features)`` batch of samples."""
        batch = np.asarray(batch, dtype=float)
        if batch.ndim == 1:
            batch = batch[None, :]
        b = batch.shape[0]
        if b == 0:
            return
        batch_mean = batch.mean(axis=0)
        batch_m2 = ((batch - batch_mean) ** 2).sum(axis=0)
        delta = batch_mean - self.mean
        total = self.count + b
        self.mean = self.mean + delta * (b / total)
        self._m2 = self._m2 + batch_m2 + delta**2 * (self.count * b / total)
        self.count = total

    def variance(self):
        """Sample variance of the streamed values (ddof=1)."""
        if self.count < 2:
            return np.full_like(self.mean, np.nan)
        return self._m2 / (self.count - 1)

    def stderr(self):
        """Standard error of the running mean."""
        return np.sqrt(self.variance() / self.count)
