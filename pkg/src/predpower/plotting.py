"""Horizontal bar charts of importance values with confidence whiskers."""

import numpy as np


def plot_importance(
    values,
    stderr=None,
    feature_names=None,
    confidence=0.95,
    max_features=None,
    color="tab:blue",
    title=None,
    ax=None,
):
    """Draw sorted importance values as horizontal bars.

    Parameters
    ----------
    values : array-like of shape (n_features,)
        Importance scores.
    stderr : array-like of shape (n_features,), optional
        Standard errors; drawn as symmetric normal-approximation whiskers
        at the given ``confidence`` level.
    feature_names : sequence of str, optional
        Tick labels; defaults to ``x0, x1, ...``.
    confidence : float
        Two-sided confidence level for the whiskers.
    max_features : int, optional
        Show only the top entries by value.
    ax : matplotlib Axes, optional
        Draw into an existing axes instead of a new figure.

    Returns
    -------
    matplotlib Axes
    """
    import matplotlib.pyplot as plt

    values = np.asarray(values, dtype=float)
    d = len(values)
    if feature_names is None:
        feature_names = [f"x{i}" for i in range(d)]
    feature_names = list(feature_names)
    if len(feature_names) != d:
        raise ValueError("feature_names length does not match values")
    if stderr is not None:
        stderr = np.asarray(stderr, dtype=float)

    order = np.argsort(values)
    if max_features is not None:
        order = order[-max_features:]

    if ax is None:
        _, ax = plt.subplots(figsize=(6, 0.4 * len(order) + 1.2))
    xerr = None
    if stderr is not None:
        from statistics import NormalDist

        z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
        xerr = z * stderr[order]
    ax.barh(
        np.arange(len(order)),
        values[order],
        xerr=xerr,
        color=color,
        capsize=3,
        error_kw={"elinewidth": 1.0},
    )
    ax.set_yticks(np.arange(len(order)))
    ax.set_yticklabels([feature_names[i] for i in order])
    ax.set_xlabel("importance")
    if title:
        ax.set_title(title)
    ax.axvline(0.0, color="black", linewidth=0.8)
    ax.figure.tight_layout()
    return ax
