"""Command line interface: score a CSV dataset and chart the results.

``predpower run`` trains a small reference model on a CSV file, scores the
features with the chosen importance method, and writes a JSON report (and
optionally an SVG chart). ``predpower plot`` renders a chart from a saved
report.
"""

import argparse
import json
import sys

import numpy as np

from .baselines import (
    AblationImportance,
    MeanImputationImportance,
    PermutationImportance,
    UnivariateImportance,
)
from .importance import ShapleyImportance
from .models import LinearRegression, LogisticRegressionGD


def _load_dataset(path, target):
    import pandas as pd

    df = pd.read_csv(path)
    if target not in df.columns:
        raise SystemExit(f"error: target column {target!r} not in {list(df.columns)}")
    y = df[target]
    X = df.drop(columns=[target])
    feature_names = list(X.columns)
    for col in X.columns:
        if not pd.api.types.is_numeric_dtype(X[col]):
            X[col] = pd.factorize(X[col])[0]
    return X.to_numpy(dtype=float), y, feature_names


def _resolve_task(y, choice):
    if choice != "auto":
        return choice
    import pandas as pd

    if not pd.api.types.is_numeric_dtype(y):
        return "classification"
    vals = np.unique(np.asarray(y))
    if len(vals) <= 10 and np.allclose(vals, np.round(vals)):
        return "classification"
    return "regression"


def _split(n, test_size, rng):
    idx = rng.permutation(n)
    n_test = max(1, int(round(test_size * n)))
    return idx[n_test:], idx[:n_test]


def cmd_run(args):
    X, y_raw, feature_names = _load_dataset(args.data, args.target)
    task = _resolve_task(y_raw, args.task)
    if task == "classification":
        y = np.asarray(y_raw)
        loss = "cross_entropy"
        estimator = LogisticRegressionGD()
    else:
        y = np.asarray(y_raw, dtype=float)
        loss = "mse"
        estimator = LinearRegression()

    rng = np.random.default_rng(args.seed)
    train, test = _split(len(X), args.test_size, rng)
    X_tr, y_tr = X[train], y[train]
    X_te, y_te = X[test], y[test]

    bg = X_tr
    if len(bg) > args.background:
        bg = bg[rng.choice(len(bg), size=args.background, replace=False)]

    if args.method in ("ablation", "univariate"):
        cls = AblationImportance if args.method == "ablation" else UnivariateImportance
        imp = cls(estimator, loss=loss)
        imp.fit(X_tr, y_tr, X_eval=X_te, y_eval=y_te)
    else:
        model = estimator.fit(X_tr, y_tr)
        if args.method == "shapley":
            imp = ShapleyImportance(
                model,
                loss=loss,
                background=bg,
                n_permutations=args.permutations,
                tol=args.tol,
                random_state=args.seed,
                verbose=1 if args.verbose else 0,
            )
        elif args.method == "permutation":
            imp = PermutationImportance(
                model, loss=loss, n_repeats=args.repeats, random_state=args.seed
            )
        else:
            imp = MeanImputationImportance(model, loss=loss)
        imp.fit(X_te, y_te)

    stderr = getattr(imp, "stderr_", None)
    result = {
        "method": args.method,
        "loss": loss,
        "model": type(estimator).__name__,
        "feature_names": feature_names,
        "values": imp.values_.tolist(),
        "stderr": None if stderr is None else np.asarray(stderr).tolist(),
        "intercept": float(imp.intercept_),
        "baseline_loss": float(getattr(imp, "baseline_loss_", np.nan)),
        "model_loss": float(getattr(imp, "model_loss_", np.nan)),
        "n_permutations": getattr(imp, "n_permutations_", None),
        "converged": getattr(imp, "converged_", None),
        "n_train": int(len(train)),
        "n_eval": int(len(test)),
        "seed": args.seed,
    }
    text = json.dumps(result, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.plot:
        _render(result, args.plot, args.max_features)
        print(f"chart written to {args.plot}", file=sys.stderr)
    return 0


def _render(result, path, max_features=None):
    import matplotlib

    matplotlib.use("Agg")
    from .plotting import plot_importance

    ax = plot_importance(
        result["values"],
        stderr=result["stderr"],
        feature_names=result["feature_names"],
        max_features=max_features,
        title=f"{result['method']} importance ({result['loss']})",
    )
    ax.figure.savefig(path)


def cmd_plot(args):
    with open(args.results) as fh:
        result = json.load(fh)
    _render(result, args.output, args.max_features)
    print(f"chart written to {args.output}", file=sys.stderr)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="predpower",
        description="Feature importance from predictive power on a CSV dataset.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="score features and write a JSON report")
    run.add_argument("data", help="path to a CSV file")
    run.add_argument("--target", required=True, help="name of the target column")
    run.add_argument(
        "--method",
        default="shapley",
        choices=["shapley", "permutation", "mean", "ablation", "univariate"],
    )
    run.add_argument(
        "--task", default="auto", choices=["auto", "classification", "regression"]
    )
    run.add_argument("--test-size", type=float, default=0.2)
    run.add_argument("--background", type=int, default=512,
                     help="max rows kept as the sampling background")
    run.add_argument("--permutations", type=int, default=4096,
                     help="cap on sampled permutations (shapley)")
    run.add_argument("--tol", type=float, default=0.01,
                     help="convergence threshold relative to the value range")
    run.add_argument("--repeats", type=int, default=10,
                     help="shuffles per feature (permutation)")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--output", "-o", help="write JSON here instead of stdout")
    run.add_argument("--plot", help="also write an SVG chart here")
    run.add_argument("--max-features", type=int, default=None)
    run.add_argument("--verbose", action="store_true")
    run.set_defaults(func=cmd_run)

    plot = sub.add_parser("plot", help="render a chart from a JSON report")
    plot.add_argument("results", help="path to a JSON report from `run`")
    plot.add_argument("--output", "-o", required=True, help="SVG output path")
    plot.add_argument("--max-features", type=int, default=None)
    plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
