"""Cooperative games over feature subsets, valued by predictive power."""

import numpy as np

from ._validation import (
    check_features,
    make_predict_fn,
    prepare_target,
)
from .imputers import make_imputer
from .losses import get_loss


def as_mask(subset, n_players):
    """Normalize a subset (bool mask or index iterable) to a bool mask."""
    subset = np.asarray(subset)
    if subset.dtype == bool:
        if subset.shape != (n_players,):
            raise ValueError(f"mask must have shape ({n_players},)")
        return subset
    mask = np.zeros(n_players, dtype=bool)
    mask[subset.astype(int)] = True
    return mask


class PredictivePowerGame:
    """Reduction in average loss when the model sees a subset of features.

    The value of a subset S is the loss of the background-mean prediction
    minus the loss obtained when features in S are known and the rest are
    marginalized out over the background. The empty set is worth 0 and the
    full set is worth ``baseline_loss_ - model_loss_``.

    Evaluating one subset costs ``len(X) * n_background`` model rows, and
    exact Shapley computation enumerates all 2**d subsets, so this class is
    meant for small feature counts; use ``ShapleyImportance`` otherwise.

    Parameters
    ----------
    model : callable or estimator
        Fitted model; a callable mapping rows to outputs, or an object with
        ``predict`` / ``predict_proba``.
    X, y : array-like
        Evaluation data over which losses are averaged.
    loss : str or callable, default="mse"
        "mse", "cross_entropy", or a per-sample loss callable.
    background : array-like, optional
        Rows used to marginalize out withheld features; defaults to ``X``.
    imputation : {"marginal", "mean"} or imputer instance
    """

    def __init__(self, model, X, y, loss="mse", background=None, imputation="marginal"):
        X, self.feature_names = check_features(X)
        self.X = X
        self.loss_fn, loss_name = get_loss(loss)
        self.predict_fn = make_predict_fn(model, loss_name)
        self.imputer = make_imputer(imputation, X if background is None else background)
        if self.imputer.background.shape[1] != X.shape[1]:
            raise ValueError("background and X have different feature counts")
        self.mean_prediction = self.imputer.mean_prediction(self.predict_fn)
        self.y, self.classes_ = prepare_target(
            y, loss_name, model, n_outputs=self.mean_prediction.shape[0]
        )
        if len(self.y) != len(X):
            raise ValueError("X and y have different lengths")
        n = len(X)
        self.baseline_loss_ = float(
            self.loss_fn(np.tile(self.mean_prediction, (n, 1)), self.y).mean()
        )
        self.model_loss_ = float(self.loss_fn(self.predict_fn(X), self.y).mean())

    @property
    def n_players(self):
        return self.X.shape[1]

    def __call__(self, subset):
        mask = as_mask(subset, self.n_players)
        if not mask.any():
            return 0.0
        preds = self.imputer.restricted(self.predict_fn, self.X, mask)
        return self.baseline_loss_ - float(self.loss_fn(preds, self.y).mean())
