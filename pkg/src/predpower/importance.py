"""Shapley allocation of a model's predictive power across features."""

import numpy as np

from ._validation import (
    check_background,
    check_features,
    check_random_generator,
    make_predict_fn,
    prepare_target,
)
from .base import BaseImportance
from .imputers import make_imputer
from .losses import get_loss
from .moments import RunningMoments


class ShapleyImportance(BaseImportance):
    """Global feature importance as Shapley values of predictive power.

    Treats features as players in a cooperative game whose payoff for a
    subset S is the reduction in average loss, relative to predicting the
    background-mean output, when the model sees only the features in S
    (the rest are marginalized out over a background dataset). Shapley
    values split the model's total loss reduction fairly across features
    while accounting for interactions: each feature's score is its average
    marginal contribution over random feature orderings.

    The estimate is Monte Carlo: each iteration draws an evaluation example
    and a random feature ordering, then walks the ordering, revealing one
    feature at a time and recording the loss improvement it brings. Per
    ordering this costs ``n_features`` model calls on
    ``batch_size * n_inner_samples`` rows. Examples are visited in shuffled
    passes over the evaluation set, so after whole passes the scores sum
    exactly to ``baseline_loss_ - model_loss_``. Per-feature standard
    errors shrink as ``1/sqrt(n)`` and drive the stopping rule.

    Parameters
    ----------
    model : callable or estimator
        Fitted model to explain; a callable mapping a feature matrix to
        outputs, or an object with ``predict`` / ``predict_proba``
        (``predict_proba`` is used for cross entropy).
    loss : str or callable, default="mse"
        "mse", "cross_entropy", or a callable ``(pred, y) -> (n,)`` of
        per-sample losses on 2-D predictions.
    background : array-like of shape (m, n_features), optional
        Rows used to fill in withheld features. Defaults to the data passed
        to ``fit``. Runtime scales with ``m``, so subsample large datasets
        (a few hundred rows is typical).
    imputation : {"marginal", "mean"} or imputer instance, default="marginal"
        How withheld features are filled in: draws from the background
        (marginal distribution) or the background column means.
    n_permutations : int, optional
        Cap on sampling iterations (one feature ordering each). None means
        run until the convergence rule fires; always set a cap if features
        may be equally important, since the relative rule cannot trigger
        when the value range is pure noise.
    n_inner_samples : int, optional
        Background rows drawn (with replacement) per iteration to estimate
        withheld-feature expectations. None uses every background row,
        making that expectation exact over the background.
    batch_size : int, default=32
        Evaluation examples processed per iteration batch; a throughput
        knob with no effect on the estimate.
    tol : float, optional, default=0.01
        Convergence threshold: stop once the largest standard error drops
        below ``tol`` times the range of the estimated values. None
        disables the rule (then ``n_permutations`` is required).
    n_features_to_select, threshold : optional
        Feature-selection rule applied by ``transform``; see base class.
    random_state : int, numpy Generator, optional
    verbose : int, default=0
        Print progress after each batch when positive.

    Attributes
    ----------
    values_ : ndarray of shape (n_features,)
        Estimated importance; sums to the model's total loss reduction.
    stderr_ : ndarray of shape (n_features,)
        Standard error of each estimate.
    baseline_loss_ : float
        Average loss of the constant background-mean prediction.
    model_loss_ : float
        Average loss of the model with all features.
    n_permutations_ : int
        Iterations actually run.
    converged_ : bool
        Whether the stopping rule was satisfied at the end.
    """

    def __init__(
        self,
        model,
        loss="mse",
        background=None,
        imputation="marginal",
        n_permutations=None,
        n_inner_samples=None,
        batch_size=32,
        tol=0.01,
        n_features_to_select=None,
        threshold=None,
        random_state=None,
        verbose=0,
    ):
        self.model = model
        self.loss = loss
        self.background = background
        self.imputation = imputation
        self.n_permutations = n_permutations
        self.n_inner_samples = n_inner_samples
        self.batch_size = batch_size
        self.tol = tol
        self.n_features_to_select = n_features_to_select
        self.threshold = threshold
        self.random_state = random_state
        self.verbose = verbose

    def fit(self, X, y):
        """Estimate importance values on evaluation data ``(X, y)``.

        The model is treated as fixed; to measure importance for
        generalization rather than training-set fit, pass data the model
        was not trained on.
        """
        if self.tol is None and self.n_permutations is None:
            raise ValueError("set tol and/or n_permutations; both were None")
        if self.n_permutations is not None and self.n_permutations < 1:
            raise ValueError("n_permutations must be at least 1")
        X, feature_names = check_features(X)
        self._set_feature_metadata(X, feature_names)
        n, d = X.shape

        loss_fn, loss_name = get_loss(self.loss)
        predict = make_predict_fn(self.model, loss_name)
        background = X if self.background is None else check_background(
            self.background, d
        )
        imputer = make_imputer(self.imputation, background)
        rng = check_random_generator(self.random_state)

        mean_pred = imputer.mean_prediction(predict)
        y_enc, self.classes_ = prepare_target(
            y, loss_name, self.model, n_outputs=mean_pred.shape[0]
        )
        if len(y_enc) != n:
            raise ValueError("X and y have different lengths")
        self.baseline_loss_ = float(
            loss_fn(np.tile(mean_pred, (n, 1)), y_enc).mean()
        )
        self.model_loss_ = float(loss_fn(predict(X), y_enc).mean())

        pool = imputer.background
        m = pool.shape[0] if self.n_inner_samples is None else int(self.n_inner_samples)
        if m < 1:
            raise ValueError("n_inner_samples must be positive")

        moments = RunningMoments(d)
        order = rng.permutation(n)
        cursor = 0
        converged = False
        rows = None

        while True:
            batch = self.batch_size
            if self.n_permutations is not None:
                batch = min(batch, self.n_permutations - moments.count)
            if batch <= 0:
                break

            idx = np.empty(batch, dtype=int)
            filled = 0
            while filled < batch:
                if cursor == n:
                    order = rng.permutation(n)
                    cursor = 0
                take = min(batch - filled, n - cursor)
                idx[filled : filled + take] = order[cursor : cursor + take]
                cursor += take
                filled += take

            xb = X[idx]
            yb = y_enc[idx]
            perms = rng.permuted(np.tile(np.arange(d), (batch, 1)), axis=1)
            if self.n_inner_samples is None:
                work = np.repeat(pool[None, :, :], batch, axis=0)
            else:
                work = pool[rng.integers(0, pool.shape[0], size=(batch, m))]

            if rows is None or len(rows) != batch:
                rows = np.arange(batch)
            prev_loss = loss_fn(np.broadcast_to(mean_pred, (batch, len(mean_pred))), yb)
            deltas = np.empty((batch, d))
            for j in range(d):
                cols = perms[:, j]
                work[rows, :, cols] = xb[rows, cols][:, None]
                preds = predict(work.reshape(batch * m, d))
                preds = preds.reshape(batch, m, -1).mean(axis=1)
                cur_loss = loss_fn(preds, yb)
                deltas[rows, cols] = prev_loss - cur_loss
                prev_loss = cur_loss
            moments.update(deltas)

            gap = float(moments.mean.max() - moments.mean.min())
            max_stderr = (
                float(np.nanmax(moments.stderr())) if moments.count >= 2 else np.inf
            )
            if self.verbose:
                print(
                    f"[{type(self).__name__}] n={moments.count} "
                    f"max_stderr={max_stderr:.3g} range={gap:.3g}"
                )
            if self.tol is not None and moments.count >= 2 and max_stderr <= self.tol * gap:
                converged = True
                break
            if self.n_permutations is not None and moments.count >= self.n_permutations:
                converged = bool(
                    self.tol is not None
                    and moments.count >= 2
                    and max_stderr <= self.tol * gap
                )
                break

        self.values_ = moments.mean.copy()
        self.stderr_ = moments.stderr()
        self.n_permutations_ = moments.count
        self.converged_ = converged
        self.intercept_ = 0.0
        return self
