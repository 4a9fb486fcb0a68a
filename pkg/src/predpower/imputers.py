"""Strategies for evaluating a model when some features are withheld.

Withheld features are filled in from a background dataset and the model's
predictions are averaged over the fill-ins, approximating the expectation
of the model output with the missing features drawn from their marginal
distribution.
"""

import numpy as np

from ._validation import check_matrix

# Rows per model call when tiling eval rows against the background.
_MAX_ROWS_PER_CALL = 2**20


class MarginalImputer:
    """Averages model output over background rows substituted into the
    withheld columns.

    Parameters
    ----------
    background : array-like of shape (m, n_features)
        Reference rows that stand in for withheld feature values. With a
        large dataset, pass a subsample (a few hundred rows is typical);
        cost scales linearly with ``m``.
    """

    def __init__(self, background):
        self.background = check_matrix(background, name="background")

    @property
    def n_background(self):
        return self.background.shape[0]

    def mean_prediction(self, predict_fn):
        """Model output averaged over the whole background, shape (p,)."""
        return predict_fn(self.background).mean(axis=0)

    def restricted(self, predict_fn, X, mask):
        """Predictions for ``X`` using only the features where ``mask`` is True.

        Each row of ``X`` is repeated over the background with the masked-in
        columns pinned to the row's values, and predictions are averaged over
        the background copies. Returns shape ``(len(X), p)``.
        """
        X = np.asarray(X, dtype=float)
        mask = np.asarray(mask, dtype=bool)
        if mask.all():
            return predict_fn(X)
        n, d = X.shape
        m = self.n_background
        if not mask.any():
            mean = self.mean_prediction(predict_fn)
            return np.tile(mean, (n, 1))

        chunk = max(1, _MAX_ROWS_PER_CALL // m)
        out = []
        for start in range(0, n, chunk):
            xs = X[start : start + chunk]
            work = np.repeat(self.background[None, :, :], len(xs), axis=0)
            work[:, :, mask] = xs[:, None, mask]
            preds = predict_fn(work.reshape(-1, d))
            out.append(preds.reshape(len(xs), m, -1).mean(axis=1))
        return np.vstack(out)


class MeanImputer(MarginalImputer):
    """Fills withheld columns with the background mean (single reference row).

    Equivalent to a marginal imputer whose background is collapsed to its
    column means; exact for models that are linear in the withheld features.
    """

    def __init__(self, background):
        bg = check_matrix(background, name="background")
        super().__init__(bg.mean(axis=0, keepdims=True))


def make_imputer(imputation, background):
    if isinstance(imputation, MarginalImputer):
        return imputation
    if imputation == "marginal":
        return MarginalImputer(background)
    if imputation == "mean":
        return MeanImputer(background)
    raise ValueError(
        f"imputation must be 'marginal', 'mean' or an imputer instance, got {imputation!r}"
    )
