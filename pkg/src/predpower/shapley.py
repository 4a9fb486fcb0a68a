"""Shapley value solvers for cooperative games given as set functions.

A game is a callable taking a boolean membership mask of shape
``(n_players,)`` and returning a float. Both solvers here enumerate or
sample feature subsets directly and are exact/near-exact references for
small player counts; the sampling estimator in ``importance`` scales to
larger ones.
"""

from math import comb

import numpy as np

from ._validation import check_random_generator


def shapley_values(game, n_players=None):
    """Exact Shapley values by enumeration over all subsets.

    Each player's value is the average of its marginal contributions
    ``game(S + i) - game(S)``, weighted by ``1 / (d * C(d-1, |S|))`` over
    the subsets S not containing the player. Cost is ``2**d`` game
    evaluations.
    """
    d = _resolve_n_players(game, n_players)
    values = np.empty(2**d)
    for code in range(2**d):
        values[code] = game(_mask_from_code(code, d))

    sizes = np.array([bin(code).count("1") for code in range(2**d)])
    weights = np.array([1.0 / (d * comb(d - 1, s)) for s in range(d)])

    phi = np.zeros(d)
    for i in range(d):
        bit = 1 << i
        without = np.array([code for code in range(2**d) if not code & bit])
        contrib = values[without | bit] - values[without]
        phi[i] = (weights[sizes[without]] * contrib).sum()
    return phi


def shapley_kernel_weight(n_players, subset_size):
    """Weight of a subset in the least-squares characterization.

    Infinite at the empty and full sets; those are handled as constraints
    by the solver instead.
    """
    d, s = n_players, subset_size
    if s <= 0 or s >= d:
        raise ValueError("kernel weight is only finite for proper nonempty subsets")
    return (d - 1) / (comb(d, s) * s * (d - s))


def shapley_values_wls(game, n_players=None, n_subsets=None, random_state=None):
    """Shapley values as the solution of a weighted least-squares fit.

    Fits an additive surrogate ``u(S) = sum_{i in S} phi_i`` to the game
    over proper subsets, weighting each subset by the kernel weight and
    constraining ``sum(phi) = game(full) - game(empty)``. With
    ``n_subsets=None`` every proper subset is used and the result equals
    ``shapley_values`` up to solver precision; otherwise ``n_subsets``
    subsets are sampled from the kernel distribution, giving a Monte Carlo
    approximation.
    """
    d = _resolve_n_players(game, n_players)
    rng = check_random_generator(random_state)

    v_empty = float(game(np.zeros(d, dtype=bool)))
    v_full = float(game(np.ones(d, dtype=bool)))
    total = v_full - v_empty
    if d == 1:
        return np.array([total])

    if n_subsets is None:
        masks = np.array(
            [_mask_from_code(code, d) for code in range(1, 2**d - 1)], dtype=bool
        )
        weights = np.array([shapley_kernel_weight(d, m.sum()) for m in masks])
    else:
        size_probs = np.array([1.0 / (s * (d - s)) for s in range(1, d)])
        size_probs /= size_probs.sum()
        sizes = rng.choice(np.arange(1, d), size=n_subsets, p=size_probs)
        masks = np.zeros((n_subsets, d), dtype=bool)
        for row, s in enumerate(sizes):
            masks[row, rng.choice(d, size=s, replace=False)] = True
        weights = np.ones(n_subsets)

    targets = np.array([float(game(m)) for m in masks]) - v_empty

    # KKT system for the equality-constrained weighted least squares.
    Z = masks.astype(float)
    A = Z.T @ (Z * weights[:, None])
    c = Z.T @ (weights * targets)
    system = np.zeros((d + 1, d + 1))
    system[:d, :d] = 2.0 * A
    system[:d, d] = 1.0
    system[d, :d] = 1.0
    rhs = np.concatenate([2.0 * c, [total]])
    try:
        solution = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError:
        solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
    return solution[:d]


def _resolve_n_players(game, n_players):
    if n_players is None:
        n_players = getattr(game, "n_players", None)
    if n_players is None:
        raise ValueError("n_players not given and game does not expose it")
    n_players = int(n_players)
    if n_players < 1:
        raise ValueError("need at least one player")
    return n_players


def _mask_from_code(code, d):
    return np.array([bool(code >> i & 1) for i in range(d)])
