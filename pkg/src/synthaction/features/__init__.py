"""Classical feature extractors and their quantizers."""

from .pca import PcaModel, pca_fit, pca_project, pca_reconstruct
from .skeleton import skeletonize
from .hog import hog, hog_length
from .bgsub import bg_subtract, bg_subtract_frames
from .bow import Codebook, bow_encode, kmeans_fit
from .sift import SiftKeypoint, sift, match_descriptors
from .store import read_fmx, write_fmx, read_labels_csv, write_labels_csv

__all__ = [
    "Codebook",
    "PcaModel",
    "SiftKeypoint",
    "bg_subtract",
    "bg_subtract_frames",
    "bow_encode",
    "hog",
    "hog_length",
    "kmeans_fit",
    "match_descriptors",
    "pca_fit",
    "pca_project",
    "pca_reconstruct",
    "read_fmx",
    "read_labels_csv",
    "sift",
    "skeletonize",
    "write_fmx",
    "write_labels_csv",
]
