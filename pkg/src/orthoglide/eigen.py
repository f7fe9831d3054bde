"""Closed-form eigen-decomposition of real symmetric 3x3 matrices.

Eigenvalues come from the trigonometric solution of the characteristic
cubic.  The best separated eigenvalue gets its eigenvector from cross
products of the rows of ``M - lambda I``; the remaining pair is resolved
by a single Jacobi rotation inside the orthogonal complement, which stays
well defined when the two eigenvalues coincide.  Every eigenvalue is then
polished with its Rayleigh quotient.

Everything is written element-wise over leading batch axes so batch and
single-matrix calls produce identical floats.
"""

import numpy as np


def dot3(u, v):
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] + u[..., 2] * v[..., 2]


def _cross(u, v):
    return np.stack(
        [
            u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1],
            u[..., 2] * v[..., 0] - u[..., 0] * v[..., 2],
            u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0],
        ],
        axis=-1,
    )


def _matvec(M, v):
    return np.stack([dot3(M[..., r, :], v) for r in range(3)], axis=-1)


def _normalize(v):
    n = np.sqrt(dot3(v, v))
    n = np.where(n > 0, n, 1.0)
    return v / n[..., None]


def _det(M):
    return (
        M[..., 0, 0] * (M[..., 1, 1] * M[..., 2, 2] - M[..., 1, 2] * M[..., 2, 1])
        - M[..., 0, 1] * (M[..., 1, 0] * M[..., 2, 2] - M[..., 1, 2] * M[..., 2, 0])
        + M[..., 0, 2] * (M[..., 1, 0] * M[..., 2, 1] - M[..., 1, 1] * M[..., 2, 0])
    )


def _isolated_eigenvector(C):
    """Unit null vector of the rank-2 matrix ``C`` (batch)."""
    r0, r1, r2 = C[..., 0, :], C[..., 1, :], C[..., 2, :]
    candidates = np.stack([_cross(r0, r1), _cross(r0, r2), _cross(r1, r2)], axis=-2)
    norms = np.sqrt(dot3(candidates, candidates))
    best = np.argmax(norms, axis=-1)
    v = np.take_along_axis(candidates, best[..., None, None], axis=-2)[..., 0, :]
    nv = np.take_along_axis(norms, best[..., None], axis=-1)[..., 0]
    # rank < 2 only when M is a multiple of I; any axis is then an eigenvector
    fallback = np.zeros_like(v)
    fallback[..., 0] = 1.0
    return np.where((nv > 0)[..., None], v / np.where(nv > 0, nv, 1.0)[..., None], fallback)


def _complement(v):
    """Orthonormal pair spanning the plane orthogonal to unit ``v``."""
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    use_x = np.abs(x) > np.abs(y)
    zero = np.zeros_like(x)
    u = np.where(
        use_x[..., None],
        np.stack([-z, zero, x], axis=-1),
        np.stack([zero, z, -y], axis=-1),
    )
    u = _normalize(u)
    return u, _cross(v, u)


def eigh_sym3(M):
    """Eigenvalues (ascending) and eigenvectors (columns) of symmetric ``M``.

    ``M`` has shape ``(3, 3)`` or ``(..., 3, 3)`` and must be symmetric.
    """
    M = np.asarray(M, dtype=float)
    scale = np.max(np.abs(M), axis=(-2, -1))
    scale = np.where(scale > 0, scale, 1.0)
    S = M / scale[..., None, None]

    q = (S[..., 0, 0] + S[..., 1, 1] + S[..., 2, 2]) / 3.0
    I = np.eye(3)
    Bm = S - q[..., None, None] * I
    p2 = (
        Bm[..., 0, 0] ** 2 + Bm[..., 1, 1] ** 2 + Bm[..., 2, 2] ** 2
        + 2.0 * (Bm[..., 0, 1] ** 2 + Bm[..., 0, 2] ** 2 + Bm[..., 1, 2] ** 2)
    ) / 6.0
    p = np.sqrt(p2)
    safe_p = np.where(p > 0, p, 1.0)
    r = np.clip(_det(Bm / safe_p[..., None, None]) / 2.0, -1.0, 1.0)
    phi = np.arccos(r) / 3.0
    lam_hi = q + 2.0 * p * np.cos(phi)
    lam_lo = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)

    # r >= 0: the largest eigenvalue is the best separated one
    lam0 = np.where(r >= 0, lam_hi, lam_lo)
    v0 = _isolated_eigenvector(S - lam0[..., None, None] * I)
    u, w = _complement(v0)

    Su, Sw = _matvec(S, u), _matvec(S, w)
    m00, m01, m11 = dot3(u, Su), dot3(u, Sw), dot3(w, Sw)
    angle = 0.5 * np.arctan2(2.0 * m01, m00 - m11)
    c, s = np.cos(angle), np.sin(angle)
    v1 = c[..., None] * u + s[..., None] * w
    v2 = -s[..., None] * u + c[..., None] * w

    vecs = np.stack([v0, v1, v2], axis=-1)
    vals = np.stack([dot3(v, _matvec(S, v)) for v in (v0, v1, v2)], axis=-1)
    order = np.argsort(vals, axis=-1, kind="stable")
    vals = np.take_along_axis(vals, order, axis=-1) * scale[..., None]
    vecs = np.take_along_axis(vecs, order[..., None, :], axis=-1)
    return vals, vecs
