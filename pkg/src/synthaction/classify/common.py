"""Shared classifier plumbing: params, label vocab, prediction dispatch."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SvmParams:
    c: float = 1.0
    gamma: float | str = "auto-scale"
    max_iter: int = 50
    kernel: str = "rbf"

    def __post_init__(self):
        if self.c <= 0 or self.max_iter < 1:
            raise ValueError("c must be positive and max_iter >= 1")
        if self.kernel != "rbf":
            raise ValueError("only the rbf kernel is supported")
        if not (self.gamma == "auto-scale" or
                (isinstance(self.gamma, (int, float)) and self.gamma > 0)):
            raise ValueError("gamma must be positive or 'auto-scale'")


@dataclass(frozen=True)
class LogisticParams:
    inv_reg_c: float = 1.0
    max_iter: int = 100

    def __post_init__(self):
        if self.inv_reg_c <= 0 or self.max_iter < 1:
            raise ValueError("fields must be positive")


@dataclass(frozen=True)
class GbtParams:
    n_estimators: int = 100
    max_depth: int = 3
    learning_rate: float = 0.1

    def __post_init__(self):
        if self.n_estimators < 1 or self.max_depth < 1 or self.learning_rate < 0:
            raise ValueError("fields must be positive (learning_rate may be 0)")


@dataclass
class TrainedModel:
    """One trained classifier: variant tag, label vocabulary, parameter blobs."""

    variant: str                      # svm | logistic | gbt
    classes: np.ndarray               # sorted label vocabulary
    params: dict                      # declared hyperparameters
    arrays: dict[str, np.ndarray] = field(default_factory=dict)


def encode_labels(y) -> tuple[np.ndarray, np.ndarray]:
    """Return (sorted vocabulary, integer codes)."""
    y = np.asarray(y)
    classes, codes = np.unique(y, return_inverse=True)
    return classes, codes


def check_features(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError("X must be 2-D")
    if not np.isfinite(x).all():
        raise ValueError("X contains NaN or infinite values")
    return x


def _softmax(scores: np.ndarray) -> np.ndarray:
    z = scores - scores.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def decision_scores(model: TrainedModel, x: np.ndarray) -> np.ndarray:
    """Per-class scores (margins or logits), rows aligned with ``x``."""
    from . import gbt, logistic, svm  # local import avoids cycles
    x = check_features(x)
    if x.shape[0] == 0:
        return np.zeros((0, len(model.classes)))
    impl = {"svm": svm.decision_function,
            "logistic": logistic.decision_function,
            "gbt": gbt.decision_function}[model.variant]
    return impl(model, x)


def predict(model: TrainedModel, x: np.ndarray) -> np.ndarray:
    """Predicted labels; argmax ties resolve to the lowest label index."""
    scores = decision_scores(model, x)
    return model.classes[np.argmax(scores, axis=1)]


def predict_proba(model: TrainedModel, x: np.ndarray) -> np.ndarray:
    """Class distribution per row (softmax of scores for svm margins)."""
    return _softmax(decision_scores(model, x))
