"""Baselines against closed-form answers on an exactly orthogonal design.

With centered, mutually orthogonal columns scaled to population variance
``sigma_i**2`` and a noiseless linear target ``y = X @ beta``, every method
here has an exact answer: retraining or imputing away feature i costs
``beta_i**2 * sigma_i**2``, a random shuffle costs twice that in
expectation, and squared correlation gives the variance fractions.
"""

import numpy as np
import pytest

from predpower.baselines import (
    AblationImportance,
    MeanImputationImportance,
    PermutationImportance,
    UnivariateImportance,
    squared_correlation,
)
from predpower.models import LinearRegression, LogisticRegressionGD


def orthogonal_design(rng, n, sigmas):
    """Centered columns, exactly orthogonal, population variance sigma_i^2."""
    A = rng.normal(size=(n, len(sigmas)))
    A -= A.mean(axis=0)
    Q, _ = np.linalg.qr(A)
    return Q * (np.asarray(sigmas) * np.sqrt(n))


BETA = np.array([1.0, -2.0, 0.0, 0.5])
SIGMA = np.array([1.0, 0.5, 2.0, 1.5])
TRUTH = BETA**2 * SIGMA**2  # [1.0, 1.0, 0.0, 0.5625]


@pytest.fixture(scope="module")
def linear_case():
    rng = np.random.default_rng(0)
    X = orthogonal_design(rng, 512, SIGMA)
    y = X @ BETA
    model = LinearRegression().fit(X, y)
    return X, y, model


def test_mean_imputation_exact(linear_case):
    X, y, model = linear_case
    imp = MeanImputationImportance(model).fit(X, y)
    np.testing.assert_allclose(imp.values_, TRUTH, rtol=1e-9, atol=1e-9)
    assert imp.stderr_ is None
    assert imp.model_loss_ == pytest.approx(0.0, abs=1e-18)
    # additive proxy closes exactly here: total power equals the sum
    assert imp.intercept_ == pytest.approx(0.0, abs=1e-9)


def test_ablation_exact(linear_case):
    X, y, _ = linear_case
    imp = AblationImportance(LinearRegression()).fit(X, y)
    np.testing.assert_allclose(imp.values_, TRUTH, rtol=1e-7, atol=1e-9)
    assert imp.intercept_ == pytest.approx(0.0, abs=1e-7)


def test_univariate_exact(linear_case):
    X, y, _ = linear_case
    imp = UnivariateImportance(LinearRegression()).fit(X, y)
    np.testing.assert_allclose(imp.values_, TRUTH, rtol=1e-7, atol=1e-9)
    assert imp.intercept_ == 0.0
    assert imp.baseline_loss_ == pytest.approx(np.var(y), rel=1e-9)


def test_squared_correlation_gives_variance_fractions(linear_case):
    X, y, _ = linear_case
    got = squared_correlation(X, y)
    np.testing.assert_allclose(got, TRUTH / TRUTH.sum(), rtol=1e-9, atol=1e-12)


def test_permutation_doubles_the_imputation_score(linear_case):
    X, y, model = linear_case
    imp = PermutationImportance(model, n_repeats=60, random_state=1).fit(X, y)
    # shuffling costs E[(x - x')^2] = 2 sigma^2 per unit slope
    informative = BETA != 0
    np.testing.assert_allclose(
        imp.values_[informative], 2 * TRUTH[informative], rtol=0.15
    )
    err = np.abs(imp.values_ - 2 * TRUTH)
    assert (err < 6 * imp.stderr_ + 1e-12).all()
    assert imp.values_[2] == pytest.approx(0.0, abs=1e-12)


def test_permutation_single_repeat_has_no_stderr():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(50, 2))
    y = X[:, 0]
    model = LinearRegression().fit(X, y)
    imp = PermutationImportance(model, n_repeats=1, random_state=3).fit(X, y)
    assert imp.stderr_ is None


def test_classification_baselines_rank_features():
    rng = np.random.default_rng(4)
    n = 800
    X = rng.normal(size=(n, 3))
    p = 1 / (1 + np.exp(-(2.0 * X[:, 0] - 1.0 * X[:, 1])))
    y = (rng.random(n) < p).astype(int)
    model = LogisticRegressionGD().fit(X, y)

    perm = PermutationImportance(
        model, loss="cross_entropy", n_repeats=5, random_state=5
    ).fit(X, y)
    assert perm.values_[0] > perm.values_[1] > abs(perm.values_[2])

    uni = UnivariateImportance(LogisticRegressionGD(), loss="cross_entropy").fit(X, y)
    assert uni.values_[0] > uni.values_[1] > abs(uni.values_[2])
    # stand-alone power is bounded by the label entropy
    assert uni.values_.max() < np.log(2)


def test_ablation_holdout_evaluation():
    rng = np.random.default_rng(6)
    X = rng.normal(size=(300, 3))
    y = X @ np.array([1.0, 0.5, 0.0]) + rng.normal(0, 0.1, 300)
    imp = AblationImportance(LinearRegression()).fit(
        X[:200], y[:200], X_eval=X[200:], y_eval=y[200:]
    )
    assert imp.values_[0] > imp.values_[1] > imp.values_[2] - 0.05
    assert imp.model_loss_ == pytest.approx(0.01, abs=0.01)


def test_selector_interface_on_baseline(linear_case):
    X, y, model = linear_case
    imp = MeanImputationImportance(model, n_features_to_select=2).fit(X, y)
    np.testing.assert_array_equal(imp.get_support(), [True, True, False, False])
    assert imp.transform(X).shape == (len(X), 2)
