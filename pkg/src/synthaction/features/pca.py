"""Principal component analysis sized for wide image-feature matrices.

Components are the top-k eigenvectors of the sample covariance of the
mean-centered rows.  For tall-ish matrices this is an economy SVD; when
the feature dimension dominates (e.g. dense descriptor grids) the Gram
matrix route computes the same factors without materializing a d x d
covariance.  Signs are fixed so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_ZERO_SV = 1e-10


@dataclass
class PcaModel:
    """Mean, row-orthonormal components (k, d) and descending eigenvalues."""

    mean: np.ndarray
    components: np.ndarray
    eigenvalues: np.ndarray

    @property
    def k(self) -> int:
        return self.components.shape[0]

    @property
    def dims(self) -> int:
        return self.components.shape[1]


def _fix_signs(components: np.ndarray) -> np.ndarray:
    """Largest-magnitude entry of each component is made positive."""
    idx = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(components.shape[0]), idx])
    signs[signs == 0] = 1.0
    return components * signs[:, None]


def _complete_basis(components: list[np.ndarray], dims: int, k: int) -> list[np.ndarray]:
    """Fill up to k with canonical directions orthogonalized against the rest."""
    e = 0
    while len(components) < k and e < dims:
        v = np.zeros(dims)
        v[e] = 1.0
        for c in components:
            v -= (v @ c) * c
        n = np.linalg.norm(v)
        if n > 1e-8:
            components.append(v / n)
        e += 1
    return components


def pca_fit(rows: np.ndarray, k: int) -> PcaModel:
    """Fit PCA keeping the top ``k`` components."""
    rows = np.asarray(rows)
    if rows.ndim != 2:
        raise ValueError("expected a 2-D row matrix")
    n, d = rows.shape
    if n < 2:
        raise ValueError("need at least 2 rows to fit")
    if k > min(n, d):
        raise ValueError(f"k={k} exceeds min(rows, dims)={min(n, d)}")

    mean = rows.mean(axis=0, dtype=np.float64)

    if d <= 4 * n:
        xc = rows.astype(np.float64) - mean
        _, s, vt = np.linalg.svd(xc, full_matrices=False)
        comps = vt[:k]
        eig = (s[:k] ** 2) / (n - 1)
    else:
        # Gram route: eigenvectors of Xc Xc^T lift to feature space.
        # Accumulate in float64 chunks so wide float32 inputs keep precision.
        gram = np.zeros((n, n))
        chunk = max(1, (2 ** 22) // n)
        for j in range(0, d, chunk):
            xc = rows[:, j:j + chunk].astype(np.float64) - mean[j:j + chunk]
            gram += xc @ xc.T
        evals, evecs = np.linalg.eigh(gram)
        order = np.argsort(evals)[::-1][:k]
        evals = np.maximum(evals[order], 0.0)
        comps_list = []
        for i, lam in enumerate(evals):
            s = np.sqrt(lam)
            if s <= _ZERO_SV:
                break
            u = evecs[:, order[i]]
            v = np.zeros(d)
            for j in range(0, d, chunk):
                xc = rows[:, j:j + chunk].astype(np.float64) - mean[j:j + chunk]
                v[j:j + chunk] = u @ xc
            comps_list.append(v / s)
        comps_list = _complete_basis(comps_list, d, k)
        comps = np.vstack(comps_list)
        eig = (evals / (n - 1))

    eig = np.maximum(np.asarray(eig, dtype=np.float64), 0.0)
    if eig.shape[0] < k:
        eig = np.pad(eig, (0, k - eig.shape[0]))
    return PcaModel(mean=mean, components=_fix_signs(comps), eigenvalues=eig[:k])


def pca_project(model: PcaModel, row: np.ndarray) -> np.ndarray:
    """Project one row (d,) or a batch (n, d) onto the components."""
    row = np.asarray(row, dtype=np.float64)
    if row.shape[-1] != model.dims:
        raise ValueError(f"row has {row.shape[-1]} dims, model expects {model.dims}")
    return (row - model.mean) @ model.components.T


def pca_reconstruct(model: PcaModel, proj: np.ndarray) -> np.ndarray:
    """Inverse map from component space back to feature space."""
    proj = np.asarray(proj, dtype=np.float64)
    return proj @ model.components + model.mean
