"""Shared estimator machinery for the importance methods."""

from abc import ABCMeta, abstractmethod
from statistics import NormalDist

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.feature_selection import SelectorMixin
from sklearn.utils.validation import check_is_fitted


class BaseImportance(SelectorMixin, BaseEstimator, metaclass=ABCMeta):
    """Base class for feature importance estimators.

    Subclasses implement ``fit(X, y)`` and set ``values_`` (one score per
    feature, interpreted as that feature's contribution to the model's
    predictive power) plus ``stderr_`` where the method yields uncertainty
    estimates. Every estimator doubles as an sklearn feature selector:
    ``transform`` keeps the columns chosen by ``n_features_to_select``
    (top-k), ``threshold`` (minimum score), or, when neither is set, the
    features with positive importance.
    """

    @abstractmethod
    def fit(self, X, y):
        """Compute importance values; returns self."""

    def _set_feature_metadata(self, X, feature_names):
        self.n_features_in_ = X.shape[1]
        if feature_names is not None:
            self.feature_names_in_ = np.asarray(feature_names, dtype=object)
        elif hasattr(self, "feature_names_in_"):
            del self.feature_names_in_

    def _get_support_mask(self):
        check_is_fitted(self, "values_")
        k = getattr(self, "n_features_to_select", None)
        threshold = getattr(self, "threshold", None)
        if k is not None and threshold is not None:
            raise ValueError("set n_features_to_select or threshold, not both")
        if k is not None:
            if not 1 <= k <= len(self.values_):
                raise ValueError(
                    f"n_features_to_select={k} out of range for {len(self.values_)} features"
                )
            mask = np.zeros(len(self.values_), dtype=bool)
            mask[np.argsort(self.values_)[::-1][:k]] = True
            return mask
        if threshold is not None:
            return self.values_ >= threshold
        return self.values_ > 0

    def confidence_interval(self, confidence=0.95):
        """Normal-approximation interval around each importance value.

        Returns ``(lower, upper)`` arrays. Requires the estimator to have
        produced standard errors.
        """
        check_is_fitted(self, "values_")
        stderr = getattr(self, "stderr_", None)
        if stderr is None:
            raise ValueError(f"{type(self).__name__} does not estimate uncertainty")
        z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
        return self.values_ - z * stderr, self.values_ + z * stderr

    def plot(self, **kwargs):
        """Bar chart of the fitted values; see ``plotting.plot_importance``."""
        from .plotting import plot_importance

        check_is_fitted(self, "values_")
        kwargs.setdefault("feature_names", self._feature_labels())
        return plot_importance(self.values_, getattr(self, "stderr_", None), **kwargs)

    def _feature_labels(self):
        if hasattr(self, "feature_names_in_"):
            return list(self.feature_names_in_)
        return [f"x{i}" for i in range(self.n_features_in_)]
