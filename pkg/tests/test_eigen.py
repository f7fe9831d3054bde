import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from orthoglide.eigen import eigh_sym3


def _check(M, vals, vecs, tol=1e-12):
    scale = max(np.abs(M).max(), 1e-300)
    np.testing.assert_allclose(vals, np.linalg.eigvalsh(M), atol=tol * scale)
    np.testing.assert_allclose(M @ vecs, vecs * vals, atol=tol * scale)
    np.testing.assert_allclose(vecs.T @ vecs, np.eye(3), atol=tol)


@settings(max_examples=300, deadline=None)
@given(arrays(np.float64, (3, 3), elements=st.floats(-1e3, 1e3)))
def test_matches_numpy_eigh(X):
    M = X + X.T
    vals, vecs = eigh_sym3(M)
    _check(M, vals, vecs, tol=1e-11)


@pytest.mark.parametrize("d", [(2.0, 2.0, 2.0), (1.0, 1.0, 3.0), (1.0, 3.0, 3.0), (0.0, 0.0, 0.0), (-1.0, 0.0, 5.0)])
def test_repeated_eigenvalues(d, rng):
    Q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    M = Q @ np.diag(d) @ Q.T
    vals, vecs = eigh_sym3(M)
    _check(M, vals, vecs)


def test_diagonal_pattern_matrix():
    # (1 - t) I + t 11^T has eigenvalues 1 + 2t (along 1) and 1 - t twice
    t = 0.37
    M = (1 - t) * np.eye(3) + t * np.ones((3, 3))
    vals, vecs = eigh_sym3(M)
    np.testing.assert_allclose(vals, [1 - t, 1 - t, 1 + 2 * t], atol=1e-15)
    np.testing.assert_allclose(np.abs(vecs[:, 2]), np.full(3, 1 / np.sqrt(3)), atol=1e-15)


def test_batch_equals_single_bitwise(rng):
    X = rng.normal(size=(50, 3, 3))
    M = X + np.swapaxes(X, -1, -2)
    vals, vecs = eigh_sym3(M)
    for k in range(len(M)):
        v1, w1 = eigh_sym3(M[k])
        assert np.array_equal(v1, vals[k])
        assert np.array_equal(w1, vecs[k])
