"""K-means codebook and bag-of-words encoding for local descriptors."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import rng as rngmod

MAX_ITER = 300


@dataclass
class Codebook:
    """Cluster centers (n, d), final inertia and per-iteration history."""

    centroids: np.ndarray
    inertia: float
    n_iter: int
    inertia_history: list[float] = field(default_factory=list)

    @property
    def n_clusters(self) -> int:
        return self.centroids.shape[0]


def _sq_distances(x: np.ndarray, c: np.ndarray) -> np.ndarray:
    """(rows, centroids) squared euclidean distances, clamped at zero."""
    d2 = (x * x).sum(axis=1)[:, None] + (c * c).sum(axis=1)[None, :] - 2.0 * (x @ c.T)
    return np.maximum(d2, 0.0)


def _plusplus_init(x: np.ndarray, n: int, gen: np.random.Generator) -> np.ndarray:
    """Greedy D^2-weighted seeding."""
    first = int(gen.integers(0, x.shape[0]))
    centroids = [x[first]]
    closest = ((x - x[first]) ** 2).sum(axis=1)
    for _ in range(1, n):
        total = float(closest.sum())
        if total <= 0.0:  # all points coincide with chosen centers
            pick = int(gen.integers(0, x.shape[0]))
        else:
            r = gen.random() * total
            pick = int(np.searchsorted(np.cumsum(closest), r))
            pick = min(pick, x.shape[0] - 1)
        centroids.append(x[pick])
        closest = np.minimum(closest, ((x - x[pick]) ** 2).sum(axis=1))
    return np.array(centroids)


def kmeans_fit(descriptors: np.ndarray, n: int, seed: int) -> Codebook:
    """Lloyd iterations from a k-means++ start until assignments settle.

    Empty clusters are reseeded to the point farthest from its assigned
    centroid.  The recorded inertia history is non-increasing.
    """
    x = np.asarray(descriptors, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError("descriptors must be a 2-D matrix")
    if x.shape[0] < n:
        raise ValueError(f"need at least {n} rows, got {x.shape[0]}")

    gen = rngmod.substream(seed, rngmod.STREAM_KMEANS)
    centroids = _plusplus_init(x, n, gen)

    assign = None
    history: list[float] = []
    for it in range(1, MAX_ITER + 1):
        d2 = _sq_distances(x, centroids)
        new_assign = np.argmin(d2, axis=1)
        inertia = float(d2[np.arange(x.shape[0]), new_assign].sum())
        history.append(inertia)
        if assign is not None and np.array_equal(new_assign, assign):
            assign = new_assign
            break
        assign = new_assign

        for c in range(n):
            members = assign == c
            if members.any():
                centroids[c] = x[members].mean(axis=0)
        empty = [c for c in range(n) if not (assign == c).any()]
        if empty:
            closest = _sq_distances(x, centroids)[np.arange(x.shape[0]), assign]
            order = np.argsort(closest)[::-1]
            for j, c in enumerate(empty):
                centroids[c] = x[order[j]]

    d2 = _sq_distances(x, centroids)
    assign = np.argmin(d2, axis=1)
    inertia = float(d2[np.arange(x.shape[0]), assign].sum())
    return Codebook(centroids=centroids, inertia=inertia, n_iter=it,
                    inertia_history=history)


def bow_encode(codebook: Codebook, descriptors: np.ndarray) -> np.ndarray:
    """Histogram of nearest-centroid assignments (ties to lowest index)."""
    n = codebook.n_clusters
    out = np.zeros(n, dtype=np.float64)
    descriptors = np.asarray(descriptors, dtype=np.float64)
    if descriptors.size == 0:
        return out
    if descriptors.ndim != 2 or descriptors.shape[1] != codebook.centroids.shape[1]:
        raise ValueError(
            f"descriptor dims {descriptors.shape} do not match centroids "
            f"{codebook.centroids.shape}")
    assign = np.argmin(_sq_distances(descriptors, codebook.centroids), axis=1)
    np.add.at(out, assign, 1.0)
    return out
