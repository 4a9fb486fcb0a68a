"""Per-sample loss functions used to score predictions against targets.

All losses take a 2-D prediction array of shape ``(n, p)`` and return one
loss value per sample, shape ``(n,)``. Aggregation (averaging over the
evaluation set) happens in the callers.
"""

import numpy as np

_EPS = 1e-12


def mse(pred, y):
    """Squared error per sample, summed over output dimensions.

    For scalar outputs this is the ordinary squared error; for vector
    outputs it is the squared Euclidean distance.
    """
    pred = np.asarray(pred, dtype=float)
    y = np.asarray(y, dtype=float)
    if y.ndim == 1:
        y = y[:, None]
    return ((pred - y) ** 2).sum(axis=1)


def cross_entropy(pred, y):
    """Negative log-likelihood of integer class labels under predicted
    probabilities.

    ``pred`` holds one probability row per sample; ``y`` holds class
    indices into its columns. Probabilities are clipped away from zero.
    """
    pred = np.asarray(pred, dtype=float)
    y = np.asarray(y)
    picked = pred[np.arange(pred.shape[0]), y]
    return -np.log(np.clip(picked, _EPS, None))


_LOSSES = {
    "mse": mse,
    "cross_entropy": cross_entropy,
}


def get_loss(loss):
    """Resolve a loss given by name or as a callable.

    Returns ``(loss_fn, name)`` where ``name`` is the canonical registry
    name, or ``"custom"`` for user-supplied callables. Custom callables
    must accept ``(pred, y)`` with 2-D predictions and return per-sample
    losses of shape ``(n,)``.
    """
    if callable(loss):
        for name, fn in _LOSSES.items():
            if loss is fn:
                return fn, name
        return loss, "custom"
    try:
        return _LOSSES[loss], loss
    except KeyError:
        raise ValueError(
            f"unknown loss {loss!r}; expected one of {sorted(_LOSSES)} or a callable"
        ) from None


def optimal_constant(y, loss_name):
    """Best single prediction for ``y`` under the named loss.

    Mean of the targets for squared error; the empirical class
    distribution for cross entropy.
    """
    y = np.asarray(y)
    if loss_name == "mse":
        y2 = y[:, None] if y.ndim == 1 else y
        return y2.mean(axis=0).astype(float)
    if loss_name == "cross_entropy":
        counts = np.bincount(y.astype(int))
        return counts / counts.sum()
    raise ValueError(f"no optimal constant rule for loss {loss_name!r}")
