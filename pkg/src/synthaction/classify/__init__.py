"""The three classical classifiers plus the shared model container."""

from .common import (
    GbtParams,
    LogisticParams,
    SvmParams,
    TrainedModel,
    encode_labels,
    predict,
    predict_proba,
)
from .svm import svm_train
from .logistic import logistic_train, logistic_loss_and_grad
from .gbt import gbt_train
from .model_io import load_model, save_model

__all__ = [
    "GbtParams",
    "LogisticParams",
    "SvmParams",
    "TrainedModel",
    "encode_labels",
    "gbt_train",
    "load_model",
    "logistic_loss_and_grad",
    "logistic_train",
    "predict",
    "predict_proba",
    "save_model",
    "svm_train",
]
