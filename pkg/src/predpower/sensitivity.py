"""Global sensitivity analysis as a special case of predictive power.

Scoring a function against its own output with squared error turns the
importance values into a variance decomposition: with independent inputs
the total importance equals the output variance, and each value is the
Shapley share of variance explained, interactions split evenly among the
inputs involved.
"""

import numpy as np

from ._validation import check_matrix
from .importance import ShapleyImportance


def function_sensitivity(fn, X, **kwargs):
    """Fit a :class:`ShapleyImportance` of ``fn`` to its own output.

    Parameters
    ----------
    fn : callable
        Maps an ``(n, d)`` array to ``(n,)`` or ``(n, k)`` outputs.
    X : array-like of shape (n_samples, n_features)
        Sample of the input distribution; also used as the background
        unless one is passed explicitly.
    **kwargs
        Forwarded to :class:`ShapleyImportance`.

    Returns
    -------
    ShapleyImportance
        Fitted estimator; ``values_`` sum to the output variance when the
        default marginal background is the data itself.
    """
    X = check_matrix(X)
    y = np.asarray(fn(X), dtype=float)
    kwargs.setdefault("loss", "mse")
    if kwargs["loss"] != "mse":
        raise ValueError("function sensitivity is defined for loss='mse'")
    return ShapleyImportance(fn, **kwargs).fit(X, y)
