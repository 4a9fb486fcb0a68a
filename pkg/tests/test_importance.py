"""Estimator tests: the sampled values against exact enumeration, the
identities the sampler must satisfy, and the sklearn surface."""

import itertools

import numpy as np
import pandas as pd
import pytest

from predpower.games import PredictivePowerGame
from predpower.importance import ShapleyImportance
from predpower.models import LinearRegression, LogisticRegressionGD


def exact_values(model, X, y, loss, background, imputation="marginal"):
    """Oracle: full permutation enumeration of the predictive power game."""
    game = PredictivePowerGame(
        model, X, y, loss=loss, background=background, imputation=imputation
    )
    d = game.n_players
    phi = np.zeros(d)
    count = 0
    for order in itertools.permutations(range(d)):
        mask = np.zeros(d, dtype=bool)
        prev = game(mask)
        for i in order:
            mask[i] = True
            cur = game(mask)
            phi[i] += cur - prev
            prev = cur
        count += 1
    return phi / count


def _regression(seed=0, n=256, d=3):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, d))
    beta = np.arange(1, d + 1, dtype=float)
    y = X @ beta + rng.normal(0, 0.5, size=n)
    model = LinearRegression().fit(X, y)
    return X, y, model


def test_sampler_agrees_with_exact_enumeration():
    X, y, model = _regression(seed=0, n=128)
    bg = X[:32]
    exact = exact_values(model, X, y, "mse", bg)
    imp = ShapleyImportance(
        model, loss="mse", background=bg, n_permutations=20 * len(X),
        tol=None, random_state=1,
    ).fit(X, y)
    err = np.abs(imp.values_ - exact)
    # estimates should sit within a few standard errors of the truth
    assert (err < 6 * imp.stderr_ + 1e-9).all()
    np.testing.assert_allclose(imp.values_, exact, atol=0.25)


def test_efficiency_exact_after_whole_epochs():
    X, y, model = _regression(seed=1, n=50)
    imp = ShapleyImportance(
        model, loss="mse", background=X, batch_size=32,
        n_permutations=3 * len(X), tol=None, random_state=2,
    ).fit(X, y)
    total = imp.baseline_loss_ - imp.model_loss_
    assert imp.values_.sum() == pytest.approx(total, rel=1e-10)


def test_unused_feature_scores_exactly_zero():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(80, 4))
    y = X[:, 0] - 2 * X[:, 1] + rng.normal(0, 0.2, 80)
    fn = lambda A: A[:, 0] - 2 * A[:, 1]
    imp = ShapleyImportance(
        fn, loss="mse", background=X[:20], n_permutations=200,
        tol=None, random_state=4,
    ).fit(X, y)
    assert imp.values_[2] == 0.0 and imp.values_[3] == 0.0
    assert imp.stderr_[2] == 0.0 and imp.stderr_[3] == 0.0


def test_invariant_to_invertible_feature_rescaling():
    X, y, model = _regression(seed=5, n=100)
    scale = np.array([10.0, 0.1, 3.0])

    def rescaled_model(A):
        return model.predict(A / scale)

    kwargs = dict(loss="mse", n_permutations=300, tol=None, random_state=6)
    a = ShapleyImportance(model, background=X[:25], **kwargs).fit(X, y)
    b = ShapleyImportance(rescaled_model, background=X[:25] * scale, **kwargs).fit(
        X * scale, y
    )
    # same seed drives identical sampling, so values match to rounding noise
    np.testing.assert_allclose(a.values_, b.values_, rtol=1e-10, atol=1e-12)


def test_invariant_to_monotone_nonlinear_transform():
    X, y, model = _regression(seed=7, n=100)

    def warped_model(A):
        B = A.copy()
        B[:, 0] = np.log(B[:, 0])
        return model.predict(B)

    Xw = X.copy()
    Xw[:, 0] = np.exp(Xw[:, 0])
    kwargs = dict(loss="mse", n_permutations=300, tol=None, random_state=8)
    a = ShapleyImportance(model, background=X[:25], **kwargs).fit(X, y)
    b = ShapleyImportance(warped_model, background=Xw[:25], **kwargs).fit(Xw, y)
    np.testing.assert_allclose(a.values_, b.values_, rtol=1e-7, atol=1e-9)


def test_reproducible_with_fixed_seed():
    X, y, model = _regression(seed=9, n=64)
    kwargs = dict(
        loss="mse", background=X[:16], n_permutations=128, tol=None, random_state=42
    )
    a = ShapleyImportance(model, **kwargs).fit(X, y)
    b = ShapleyImportance(model, **kwargs).fit(X, y)
    np.testing.assert_array_equal(a.values_, b.values_)
    np.testing.assert_array_equal(a.stderr_, b.stderr_)


def test_convergence_criterion_reported_and_satisfied():
    X, y, model = _regression(seed=10, n=400)
    imp = ShapleyImportance(
        model, loss="mse", background=X[:64], tol=0.1, random_state=11
    ).fit(X, y)
    assert imp.converged_
    gap = imp.values_.max() - imp.values_.min()
    assert imp.stderr_.max() <= 0.1 * gap + 1e-12
    assert imp.n_permutations_ % 32 == 0  # whole batches only


def test_permutation_cap_respected():
    X, y, model = _regression(seed=12, n=64)
    imp = ShapleyImportance(
        model, loss="mse", background=X[:16], n_permutations=50,
        batch_size=32, tol=None, random_state=13,
    ).fit(X, y)
    assert imp.n_permutations_ == 50
    assert not imp.converged_


def test_inner_sampling_path_stays_close():
    X, y, model = _regression(seed=14, n=128)
    bg = X[:64]
    exact = exact_values(model, X, y, "mse", bg)
    imp = ShapleyImportance(
        model, loss="mse", background=bg, n_inner_samples=16,
        n_permutations=4096, tol=None, random_state=15,
    ).fit(X, y)
    np.testing.assert_allclose(imp.values_, exact, atol=0.35)


def test_mean_imputation_variant_runs():
    X, y, model = _regression(seed=16, n=80)
    exact = exact_values(model, X, y, "mse", X, imputation="mean")
    imp = ShapleyImportance(
        model, loss="mse", imputation="mean", n_permutations=10 * len(X),
        tol=None, random_state=17,
    ).fit(X, y)
    np.testing.assert_allclose(imp.values_, exact, atol=0.2)


def test_classification_with_string_labels():
    rng = np.random.default_rng(18)
    n = 500
    X = rng.normal(size=(n, 3))
    p = 1 / (1 + np.exp(-(1.5 * X[:, 0] - X[:, 1])))
    y = np.where(rng.random(n) < p, "pos", "neg")
    model = LogisticRegressionGD().fit(X, y)
    imp = ShapleyImportance(
        model, loss="cross_entropy", background=X[:64],
        n_permutations=500, tol=None, random_state=19,
    ).fit(X, y)
    np.testing.assert_array_equal(imp.classes_, ["neg", "pos"])
    assert imp.values_[0] > imp.values_[1] > imp.values_[2] - 0.05
    assert imp.values_.sum() > 0


def test_dataframe_input_keeps_feature_names():
    X, y, model = _regression(seed=20, n=60)
    df = pd.DataFrame(X, columns=["alpha", "beta", "gamma"])
    imp = ShapleyImportance(
        model, loss="mse", background=X[:16], n_permutations=64,
        tol=None, random_state=21,
    ).fit(df, y)
    np.testing.assert_array_equal(imp.feature_names_in_, ["alpha", "beta", "gamma"])
    assert imp.n_features_in_ == 3


def test_selector_top_k_transform():
    X, y, model = _regression(seed=22, n=100)
    imp = ShapleyImportance(
        model, loss="mse", background=X[:16], n_permutations=600,
        tol=None, random_state=23, n_features_to_select=2,
    ).fit(X, y)
    # beta = (1, 2, 3): the last two columns carry the most signal
    np.testing.assert_array_equal(imp.get_support(), [False, True, True])
    np.testing.assert_allclose(imp.transform(X), X[:, 1:])


def test_selector_threshold_and_conflict():
    X, y, model = _regression(seed=24, n=100)
    imp = ShapleyImportance(
        model, loss="mse", background=X[:16], n_permutations=600,
        tol=None, random_state=25, threshold=2.0,
    ).fit(X, y)
    assert imp.get_support().sum() >= 1
    imp.set_params(n_features_to_select=1)
    with pytest.raises(ValueError):
        imp.get_support()


def test_confidence_interval_brackets_values():
    X, y, model = _regression(seed=26, n=100)
    imp = ShapleyImportance(
        model, loss="mse", background=X[:16], n_permutations=128,
        tol=None, random_state=27,
    ).fit(X, y)
    lo, hi = imp.confidence_interval(0.95)
    assert (lo < imp.values_).all() and (imp.values_ < hi).all()
    lo2, hi2 = imp.confidence_interval(0.5)
    assert (lo < lo2).all() and (hi2 < hi).all()


def test_parameter_validation():
    X, y, model = _regression(seed=28, n=40)
    with pytest.raises(ValueError, match="tol"):
        ShapleyImportance(model, tol=None, n_permutations=None).fit(X, y)
    with pytest.raises(ValueError, match="n_permutations"):
        ShapleyImportance(model, n_permutations=0).fit(X, y)
    with pytest.raises(ValueError):
        ShapleyImportance(model, loss="nope").fit(X, y)


def test_sklearn_clone_and_get_params():
    from sklearn.base import clone

    model = LinearRegression()
    imp = ShapleyImportance(model, loss="mse", n_permutations=10, tol=None)
    assert imp.get_params()["model"] is model
    cloned = clone(imp)
    assert cloned.get_params()["n_permutations"] == 10
    # nested estimators are themselves cloned, not shared
    assert isinstance(cloned.get_params()["model"], LinearRegression)
