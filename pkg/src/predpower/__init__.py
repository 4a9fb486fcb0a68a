"""Model-agnostic global feature importance from predictive power.

Each feature is scored by how much it contributes to a model's loss
reduction, with contributions allocated as Shapley values of the
subset-performance game. Classic baselines (permutation, mean imputation,
retraining ablation, univariate power) share the same estimator interface.
"""

from .baselines import (
    AblationImportance,
    MeanImputationImportance,
    PermutationImportance,
    UnivariateImportance,
    squared_correlation,
)
from .games import PredictivePowerGame
from .importance import ShapleyImportance
from .imputers import MarginalImputer, MeanImputer
from .models import LinearRegression, LogisticRegressionGD
from .moments import RunningMoments
from .plotting import plot_importance
from .sensitivity import function_sensitivity
from .shapley import shapley_values, shapley_values_wls

__version__ = "0.1.0"

__all__ = [
    "AblationImportance",
    "LinearRegression",
    "LogisticRegressionGD",
    "MarginalImputer",
    "MeanImputationImportance",
    "MeanImputer",
    "PermutationImportance",
    "PredictivePowerGame",
    "RunningMoments",
    "ShapleyImportance",
    "UnivariateImportance",
    "function_sensitivity",
    "plot_importance",
    "shapley_values",
    "shapley_values_wls",
    "squared_correlation",
    "__version__",
]
