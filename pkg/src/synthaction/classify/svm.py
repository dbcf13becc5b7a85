"""One-vs-rest RBF support vector machine.

Each binary problem maximizes the usual box-constrained dual by
coordinate ascent over single multipliers, with the bias folded into
the kernel (K + 1), which keeps single-coordinate updates feasible.
``max_iter`` caps the number of epochs over the training set; epoch
order is a seeded permutation, so training is deterministic given
(data, params, seed).
"""

from __future__ import annotations

import numpy as np

from .. import rng as rngmod
from .common import SvmParams, TrainedModel, check_features, encode_labels

_KKT_TOL = 1e-12


def rbf_kernel(a: np.ndarray, b: np.ndarray, gamma: float) -> np.ndarray:
    d2 = ((a * a).sum(axis=1)[:, None] + (b * b).sum(axis=1)[None, :]
          - 2.0 * (a @ b.T))
    return np.exp(-gamma * np.maximum(d2, 0.0))


def resolve_gamma(gamma, x: np.ndarray) -> float:
    """'auto-scale' maps to 1 / (dims * mean feature variance)."""
    if gamma == "auto-scale":
        mean_var = float(x.var(axis=0).mean())
        if mean_var <= 0:
            mean_var = 1.0
        return 1.0 / (x.shape[1] * mean_var)
    return float(gamma)


def _solve_binary(kernel1: np.ndarray, y: np.ndarray, c: float, max_iter: int,
                  gen: np.random.Generator) -> np.ndarray:
    """Dual coordinate ascent on one binary problem; returns alpha."""
    n = kernel1.shape[0]
    alpha = np.zeros(n)
    f = np.zeros(n)  # f_i = sum_j alpha_j y_j K1[i, j]
    diag = np.diag(kernel1)
    for _ in range(max_iter):
        moved = 0.0
        for i in gen.permutation(n):
            grad = 1.0 - y[i] * f[i]
            new = min(max(alpha[i] + grad / diag[i], 0.0), c)
            delta = new - alpha[i]
            if delta != 0.0:
                alpha[i] = new
                f += (delta * y[i]) * kernel1[:, i]
                moved = max(moved, abs(delta))
        if moved < _KKT_TOL:
            break
    return alpha


def svm_train(x, y, params: SvmParams | None = None, seed: int = 0) -> TrainedModel:
    params = params or SvmParams()
    x = check_features(x)
    classes, codes = encode_labels(y)
    if len(classes) < 2:
        raise ValueError("need at least 2 classes")
    if x.shape[0] != len(codes):
        raise ValueError("X row count must match y")

    gamma = resolve_gamma(params.gamma, x)
    kernel1 = rbf_kernel(x, x, gamma) + 1.0

    dual = np.zeros((len(classes), x.shape[0]))
    for k in range(len(classes)):
        y_bin = np.where(codes == k, 1.0, -1.0)
        gen = rngmod.substream(seed, rngmod.STREAM_TRAIN, k)
        alpha = _solve_binary(kernel1, y_bin, params.c, params.max_iter, gen)
        dual[k] = alpha * y_bin

    return TrainedModel(
        variant="svm",
        classes=classes,
        params={"c": params.c, "gamma": gamma, "gamma_setting": str(params.gamma),
                "max_iter": params.max_iter, "kernel": "rbf"},
        arrays={"support_x": x, "dual_coef": dual},
    )


def decision_function(model: TrainedModel, x: np.ndarray) -> np.ndarray:
    k1 = rbf_kernel(x, model.arrays["support_x"], model.params["gamma"]) + 1.0
    return k1 @ model.arrays["dual_coef"].T


def dual_coefficients(model: TrainedModel) -> np.ndarray:
    """Per-class alpha values (nonnegative, <= C at termination)."""
    return np.abs(model.arrays["dual_coef"])
