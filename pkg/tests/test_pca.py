import numpy as np
import pytest

from synthaction.features import pca_fit, pca_project, pca_reconstruct


def closed_form_2x2_first_eigvec(points):
    """Oracle: principal eigenvector of the 2x2 sample covariance."""
    x = points - points.mean(axis=0)
    cov = x.T @ x / (len(points) - 1)
    a, b, _, d = cov[0, 0], cov[0, 1], cov[1, 0], cov[1, 1]
    lam = (a + d) / 2 + np.sqrt(((a - d) / 2) ** 2 + b * b)
    v = np.array([b, lam - a]) if abs(b) > 1e-12 else np.array([1.0, 0.0])
    return v / np.linalg.norm(v), lam


def test_identical_rows_zero_eigenvalues_zero_projections():
    rows = np.tile(np.array([3.0, -1.0, 2.0, 7.0]), (6, 1))
    model = pca_fit(rows, k=3)
    assert np.allclose(model.eigenvalues, 0.0, atol=1e-12)
    proj = pca_project(model, rows)
    assert np.allclose(proj, 0.0, atol=1e-9)
    # components still form an orthonormal set
    gram = model.components @ model.components.T
    assert np.allclose(gram, np.eye(3), atol=1e-6)


def test_first_component_matches_2x2_closed_form(rng):
    t = rng.normal(size=400)
    noise = rng.normal(scale=0.05, size=400)
    points = np.stack([t + noise, t - noise], axis=1) / np.sqrt(2)
    model = pca_fit(points, k=2)
    oracle_v, oracle_lam = closed_form_2x2_first_eigvec(points)
    v = model.components[0]
    assert min(np.linalg.norm(v - oracle_v), np.linalg.norm(v + oracle_v)) < 1e-6
    assert model.eigenvalues[0] == pytest.approx(oracle_lam, rel=1e-9)


def test_flattened_frame_dims_project_to_256(rng):
    rows = rng.normal(size=(260, 6084)).astype(np.float32)
    model = pca_fit(rows, k=256)
    assert model.components.shape == (256, 6084)
    proj = pca_project(model, rows[0])
    assert proj.shape == (256,)


def test_projection_of_mean_is_zero(rng):
    rows = rng.normal(size=(40, 12))
    model = pca_fit(rows, k=5)
    assert np.allclose(pca_project(model, model.mean), 0.0, atol=1e-9)


def test_projection_along_component_is_unit_vector_scaled(rng):
    rows = rng.normal(size=(40, 12))
    model = pca_fit(rows, k=5)
    for i, c in enumerate((2.5, -1.25)):
        row = model.mean + c * model.components[i]
        proj = pca_project(model, row)
        expected = np.zeros(5)
        expected[i] = c
        assert np.allclose(proj, expected, atol=1e-9)


def test_reconstruction_error_nonincreasing_in_k(rng):
    rows = rng.normal(size=(60, 30)) @ rng.normal(size=(30, 30))
    errors = []
    for k in (1, 3, 5, 10, 20, 30):
        model = pca_fit(rows, k=k)
        recon = pca_reconstruct(model, pca_project(model, rows))
        errors.append(np.linalg.norm(rows - recon))
    assert all(b <= a + 1e-9 for a, b in zip(errors, errors[1:]))


def test_orthonormality_and_variance_budget(rng):
    rows = rng.normal(size=(50, 80))  # wide: exercises the Gram path
    model = pca_fit(rows, k=20)
    gram = model.components @ model.components.T
    assert np.abs(gram - np.eye(20)).max() <= 1e-6
    total_var = ((rows - rows.mean(axis=0)) ** 2).sum() / (len(rows) - 1)
    assert model.eigenvalues.sum() <= total_var + 1e-9
    assert np.all(np.diff(model.eigenvalues) <= 1e-12)


def test_gram_and_svd_paths_agree(rng):
    rows = rng.normal(size=(30, 40))
    wide = pca_fit(np.hstack([rows, np.zeros((30, 200))]), k=5)   # Gram path
    tall = pca_fit(rows, k=5)                                     # SVD path
    assert np.allclose(wide.eigenvalues, tall.eigenvalues, atol=1e-9)
    assert np.allclose(np.abs(wide.components[:, :40]), np.abs(tall.components), atol=1e-6)


def test_errors(rng):
    rows = rng.normal(size=(10, 4))
    with pytest.raises(ValueError):
        pca_fit(rows[:1], k=1)
    with pytest.raises(ValueError):
        pca_fit(rows, k=5)
    model = pca_fit(rows, k=2)
    with pytest.raises(ValueError):
        pca_project(model, np.zeros(7))
