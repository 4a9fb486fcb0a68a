"""Small reference models used by the CLI and the test suite.

Both follow the sklearn estimator protocol closely enough to be cloned,
fitted on column subsets, and wrapped by the importance estimators. They
are intentionally simple: no solvers to configure, deterministic given the
data, and fast on the dataset sizes used here.
"""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, RegressorMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_matrix


class LinearRegression(BaseEstimator, RegressorMixin):
    """Ordinary least squares via ``numpy.linalg.lstsq``."""

    def fit(self, X, y):
        X = check_matrix(X)
        y = np.asarray(y, dtype=float)
        self._single_output = y.ndim == 1
        yy = y[:, None] if self._single_output else y
        ones = np.ones((len(X), 1))
        coef, *_ = np.linalg.lstsq(np.hstack([X, ones]), yy, rcond=None)
        self.coef_ = coef[:-1].T if not self._single_output else coef[:-1, 0]
        self.intercept_ = coef[-1] if not self._single_output else float(coef[-1, 0])
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_matrix(X)
        return X @ (self.coef_ if self._single_output else self.coef_.T) + self.intercept_


def _softmax(z):
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


class LogisticRegressionGD(BaseEstimator, ClassifierMixin):
    """Multinomial logistic regression trained by full-batch gradient descent.

    Features are standardized internally so one learning rate works across
    datasets; learned weights are folded back to the original scale. The l2
    penalty is applied to weights only, not the bias.

    Parameters
    ----------
    lr : float
        Step size on the standardized scale.
    n_iter : int
        Number of gradient steps.
    l2 : float
        Ridge penalty strength (per-sample convention).
    """

    def __init__(self, lr=0.5, n_iter=500, l2=1e-4):
        self.lr = lr
        self.n_iter = n_iter
        self.l2 = l2

    def fit(self, X, y):
        X = check_matrix(X)
        y = np.asarray(y)
        self.classes_, y_idx = np.unique(y, return_inverse=True)
        n, d = X.shape
        k = len(self.classes_)

        mu = X.mean(axis=0)
        sigma = X.std(axis=0)
        sigma[sigma == 0] = 1.0
        Z = (X - mu) / sigma

        onehot = np.zeros((n, k))
        onehot[np.arange(n), y_idx] = 1.0

        W = np.zeros((d, k))
        b = np.zeros(k)
        for _ in range(self.n_iter):
            P = _softmax(Z @ W + b)
            G = P - onehot
            W -= self.lr * (Z.T @ G / n + self.l2 * W)
            b -= self.lr * G.mean(axis=0)

        # Fold the standardization into the weights: z = (x - mu) / sigma.
        self.coef_ = (W / sigma[:, None]).T
        self.intercept_ = b - (W.T @ (mu / sigma))
        self.n_features_in_ = d
        return self

    def decision_function(self, X):
        check_is_fitted(self, "coef_")
        X = check_matrix(X)
        return X @ self.coef_.T + self.intercept_

    def predict_proba(self, X):
        return _softmax(self.decision_function(X))

    def predict(self, X):
        return self.classes_[self.predict_proba(X).argmax(axis=1)]
