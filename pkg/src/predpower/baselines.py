"""Classic importance baselines that score features by predictive power.

All of these fit the same additive template as the Shapley estimator: each
score is a performance gain attached to one feature, and ``intercept_``
anchors the additive proxy so that summing scores over a feature subset
approximates that subset's predictive power in the regime the method
probes (single features excluded, or single features alone).
"""

import numpy as np
from sklearn.base import clone

from ._validation import (
    check_features,
    check_random_generator,
    make_predict_fn,
    prepare_target,
)
from .base import BaseImportance
from .losses import get_loss, optimal_constant


def _evaluate(loss_fn, predict, X, y):
    return float(loss_fn(predict(X), y).mean())


def _constant_loss(loss_fn, loss_name, y):
    const = optimal_constant(y, loss_name)
    return float(loss_fn(np.tile(const, (len(y), 1)), y).mean())


class PermutationImportance(BaseImportance):
    """Loss increase when one feature column is shuffled.

    Breaking the link between a feature and the rest of the row removes its
    information (and, unlike retraining, keeps the model fixed). Scores are
    averaged over ``n_repeats`` shuffles; ``stderr_`` reflects shuffle noise.
    Ignores feature dependence, which tends to double-count correlated
    features and, on additive models, yields about twice the Shapley score.
    """

    def __init__(
        self,
        model,
        loss="mse",
        n_repeats=10,
        n_features_to_select=None,
        threshold=None,
        random_state=None,
    ):
        self.model = model
        self.loss = loss
        self.n_repeats = n_repeats
        self.n_features_to_select = n_features_to_select
        self.threshold = threshold
        self.random_state = random_state

    def fit(self, X, y):
        X, feature_names = check_features(X)
        self._set_feature_metadata(X, feature_names)
        n, d = X.shape
        loss_fn, loss_name = get_loss(self.loss)
        predict = make_predict_fn(self.model, loss_name)
        y_enc, self.classes_ = prepare_target(
            y, loss_name, self.model, n_outputs=predict(X[:1]).shape[1]
        )
        rng = check_random_generator(self.random_state)

        self.model_loss_ = _evaluate(loss_fn, predict, X, y_enc)
        scores = np.empty((self.n_repeats, d))
        work = X.copy()
        for r in range(self.n_repeats):
            for i in range(d):
                work[:, i] = X[rng.permutation(n), i]
                scores[r, i] = _evaluate(loss_fn, predict, work, y_enc) - self.model_loss_
                work[:, i] = X[:, i]
        self.values_ = scores.mean(axis=0)
        self.stderr_ = (
            scores.std(axis=0, ddof=1) / np.sqrt(self.n_repeats)
            if self.n_repeats > 1
            else None
        )
        self.baseline_loss_ = _constant_loss(loss_fn, loss_name, y_enc)
        self.intercept_ = self.baseline_loss_ - self.model_loss_ - self.values_.sum()
        return self


class MeanImputationImportance(BaseImportance):
    """Loss increase when one feature is replaced by its mean.

    A deterministic, single-pass variant of the permutation test that
    additionally assumes the model responds linearly to the feature.
    Only meaningful for features where a mean is meaningful.
    """

    def __init__(self, model, loss="mse", n_features_to_select=None, threshold=None):
        self.model = model
        self.loss = loss
        self.n_features_to_select = n_features_to_select
        self.threshold = threshold

    def fit(self, X, y):
        X, feature_names = check_features(X)
        self._set_feature_metadata(X, feature_names)
        d = X.shape[1]
        loss_fn, loss_name = get_loss(self.loss)
        predict = make_predict_fn(self.model, loss_name)
        y_enc, self.classes_ = prepare_target(
            y, loss_name, self.model, n_outputs=predict(X[:1]).shape[1]
        )

        self.model_loss_ = _evaluate(loss_fn, predict, X, y_enc)
        means = X.mean(axis=0)
        values = np.empty(d)
        work = X.copy()
        for i in range(d):
            work[:, i] = means[i]
            values[i] = _evaluate(loss_fn, predict, work, y_enc) - self.model_loss_
            work[:, i] = X[:, i]
        self.values_ = values
        self.stderr_ = None
        self.baseline_loss_ = _constant_loss(loss_fn, loss_name, y_enc)
        self.intercept_ = self.baseline_loss_ - self.model_loss_ - values.sum()
        return self


class AblationImportance(BaseImportance):
    """Loss increase of a model retrained without each feature.

    Trains ``n_features + 1`` clones of the given (unfitted) estimator: one
    on all features and one per leave-one-out subset. Correlated features
    can cover for each other, so redundant-but-useful features may score
    near zero.
    """

    def __init__(self, estimator, loss="mse", n_features_to_select=None, threshold=None):
        self.estimator = estimator
        self.loss = loss
        self.n_features_to_select = n_features_to_select
        self.threshold = threshold

    def fit(self, X, y, X_eval=None, y_eval=None):
        """Train on ``(X, y)``; score losses on ``(X_eval, y_eval)`` when
        given, otherwise in-sample."""
        X, feature_names = check_features(X)
        self._set_feature_metadata(X, feature_names)
        d = X.shape[1]
        loss_fn, loss_name = get_loss(self.loss)
        if X_eval is None:
            X_eval, y_eval = X, np.asarray(y)
        else:
            X_eval, _ = check_features(X_eval)

        full = clone(self.estimator).fit(X, y)
        predict = make_predict_fn(full, loss_name)
        y_enc, self.classes_ = prepare_target(
            y_eval, loss_name, full, n_outputs=predict(X_eval[:1]).shape[1]
        )
        self.model_loss_ = _evaluate(loss_fn, predict, X_eval, y_enc)

        values = np.empty(d)
        keep = np.ones(d, dtype=bool)
        for i in range(d):
            keep[i] = False
            reduced = clone(self.estimator).fit(X[:, keep], y)
            reduced_predict = make_predict_fn(reduced, loss_name)
            values[i] = (
                _evaluate(loss_fn, reduced_predict, X_eval[:, keep], y_enc)
                - self.model_loss_
            )
            keep[i] = True
        self.values_ = values
        self.stderr_ = None
        self.baseline_loss_ = _constant_loss(loss_fn, loss_name, y_enc)
        self.intercept_ = self.baseline_loss_ - self.model_loss_ - values.sum()
        return self


class UnivariateImportance(BaseImportance):
    """Stand-alone predictive power of each feature.

    Trains one single-feature clone of the given estimator per feature and
    scores its improvement over the best constant prediction. Interactions
    are invisible here: complementary features are undervalued.
    """

    def __init__(self, estimator, loss="mse", n_features_to_select=None, threshold=None):
        self.estimator = estimator
        self.loss = loss
        self.n_features_to_select = n_features_to_select
        self.threshold = threshold

    def fit(self, X, y, X_eval=None, y_eval=None):
        """Train on ``(X, y)``; score losses on ``(X_eval, y_eval)`` when
        given, otherwise in-sample."""
        X, feature_names = check_features(X)
        self._set_feature_metadata(X, feature_names)
        d = X.shape[1]
        loss_fn, loss_name = get_loss(self.loss)
        if X_eval is None:
            X_eval, y_eval = X, np.asarray(y)
        else:
            X_eval, _ = check_features(X_eval)

        values = np.empty(d)
        y_enc = None
        for i in range(d):
            model = clone(self.estimator).fit(X[:, [i]], y)
            predict = make_predict_fn(model, loss_name)
            if y_enc is None:
                y_enc, self.classes_ = prepare_target(
                    y_eval, loss_name, model, n_outputs=predict(X_eval[:1, [i]]).shape[1]
                )
                self.baseline_loss_ = _constant_loss(loss_fn, loss_name, y_enc)
            values[i] = self.baseline_loss_ - _evaluate(
                loss_fn, predict, X_eval[:, [i]], y_enc
            )
        self.values_ = values
        self.stderr_ = None
        self.intercept_ = 0.0
        return self


def squared_correlation(X, y):
    """Squared Pearson correlation of each feature with a scalar target.

    The variance fraction a univariate linear model would explain; a quick,
    model-free member of the same additive family.
    """
    X, _ = check_features(X)
    y = np.asarray(y, dtype=float).ravel()
    if len(y) != len(X):
        raise ValueError("X and y have different lengths")
    xc = X - X.mean(axis=0)
    yc = y - y.mean()
    denom = np.sqrt((xc**2).sum(axis=0) * (yc**2).sum())
    with np.errstate(invalid="ignore", divide="ignore"):
        corr = np.where(denom > 0, xc.T @ yc / denom, 0.0)
    return corr**2
