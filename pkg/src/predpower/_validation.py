"""Input validation and model/prediction adapters shared by the estimators."""

import numpy as np
from sklearn.utils import check_array


def check_matrix(X, name="X"):
    """Coerce to a 2-D float64 array with at least one row and column."""
    return check_array(
        X, dtype=np.float64, ensure_2d=True, input_name=name, ensure_min_samples=1
    )


def check_features(X):
    """Validate a feature matrix, keeping column names when present.

    Returns ``(array, feature_names)`` where ``feature_names`` is a list of
    strings for DataFrame input and None otherwise.
    """
    names = None
    if hasattr(X, "columns"):
        names = [str(c) for c in X.columns]
    return check_matrix(X), names


def check_background(background, n_features):
    bg = check_matrix(background, name="background")
    if bg.shape[1] != n_features:
        raise ValueError(
            f"background has {bg.shape[1]} columns, expected {n_features}"
        )
    return bg


def make_predict_fn(model, loss_name):
    """Turn a model into a callable returning standardized 2-D predictions.

    Accepts a plain callable, or an object exposing ``predict_proba`` (used
    for cross entropy) / ``predict``. 1-D outputs become a single column;
    for cross entropy a single probability column is expanded to the
    two-class form ``[1 - p, p]``.
    """
    if hasattr(model, "predict_proba") and loss_name == "cross_entropy":
        base = model.predict_proba
    elif hasattr(model, "predict"):
        base = model.predict
    elif callable(model):
        base = model
    else:
        raise TypeError(
            "model must be callable or expose predict/predict_proba, "
            f"got {type(model).__name__}"
        )

    def predict(A):
        out = np.asarray(base(A), dtype=float)
        if out.ndim == 1:
            out = out[:, None]
        elif out.ndim != 2:
            raise ValueError(f"model output must be 1-D or 2-D, got shape {out.shape}")
        if loss_name == "cross_entropy" and out.shape[1] == 1:
            out = np.hstack([1.0 - out, out])
        return out

    return predict


def prepare_target(y, loss_name, model, n_outputs):
    """Encode targets to match standardized predictions.

    For cross entropy, labels become integer positions into the model's
    probability columns (``model.classes_`` when available, otherwise the
    sorted unique labels). For other losses, targets become a 2-D float
    array. Returns ``(encoded_y, classes_or_None)``.
    """
    y = np.asarray(y)
    if y.ndim > 1 and loss_name == "cross_entropy":
        raise ValueError("cross entropy expects 1-D class labels")
    if loss_name == "cross_entropy":
        classes = getattr(model, "classes_", None)
        if classes is None:
            if np.issubdtype(y.dtype, np.integer) and y.min() >= 0 and y.max() < n_outputs:
                return y.astype(int), np.arange(n_outputs)
            classes = np.unique(y)
        classes = np.asarray(classes)
        idx = np.searchsorted(classes, y)
        valid = (idx < len(classes)) & (classes[np.clip(idx, 0, len(classes) - 1)] == y)
        if not valid.all():
            bad = np.asarray(y)[~valid][:5]
            raise ValueError(f"labels {bad!r} not among model classes {classes!r}")
        if len(classes) > n_outputs:
            raise ValueError(
                f"{len(classes)} classes but model outputs {n_outputs} columns"
            )
        return idx.astype(int), classes
    y = y.astype(float)
    if y.ndim == 1:
        y = y[:, None]
    if y.shape[1] != n_outputs:
        raise ValueError(
            f"target has {y.shape[1]} output columns, model predicts {n_outputs}"
        )
    return y, None


def check_random_generator(random_state):
    """Normalize ``random_state`` (None, int, or Generator) to a Generator."""
    if isinstance(random_state, np.random.Generator):
        return random_state
    return np.random.default_rng(random_state)
