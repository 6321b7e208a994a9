"""Exponential and logarithm maps, tangent frames and projections on S^d.

Every function is vectorized: points are arrays (..., n) of unit vectors of
R^n, n = d + 1.
"""

import numpy as np

from .errors import AntipodalPoints

ANTIPODAL_TOLERANCE = 1e-9


def sinc(t):
    """sin(t) / t, equal to 1 at 0."""
    return np.sinc(np.asarray(t) / np.pi)


def sphere_exp(x, v):
    """Point reached at time 1 by the geodesic from x with velocity v."""
    x, v = np.asarray(x, dtype=float), np.asarray(v, dtype=float)
    t = np.linalg.norm(v, axis=-1, keepdims=True)
    return np.cos(t) * x + sinc(t) * v


def sphere_log(x, y):
    """Tangent vector v at x with sphere_exp(x, v) = y and |v| < pi.

    Raises AntipodalPoints when |x + y| < 1e-9.
    """
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    separation = np.linalg.norm(x + y, axis=-1)
    if np.any(separation < ANTIPODAL_TOLERANCE):
        raise AntipodalPoints(float(np.min(separation)), ANTIPODAL_TOLERANCE)
    cosine = np.sum(x * y, axis=-1, keepdims=True)
    w = y - cosine * x
    sine = np.linalg.norm(w, axis=-1, keepdims=True)
    angle = np.arctan2(sine, cosine)
    # angle / sine -> 1 when y -> x.
    ratio = np.where(sine > 1e-300, angle / np.where(sine > 1e-300, sine, 1.0), 1.0)
    return ratio * w


def geodesic_distance(x, y):
    """Great-circle distance, accurate for close points."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return 2 * np.arcsin(np.clip(np.linalg.norm(x - y, axis=-1) / 2, 0, 1))


def project_tangent(x, v):
    """Orthogonal projection of v onto the tangent space at x."""
    x, v = np.asarray(x, dtype=float), np.asarray(v, dtype=float)
    if v.ndim == x.ndim:
        return v - np.sum(x * v, axis=-1, keepdims=True) * x
    # v holds several vectors as columns (..., n, k).
    return v - x[..., :, None] * np.einsum("...n,...nk->...k", x, v)[..., None, :]


def normalize(points):
    return points / np.linalg.norm(points, axis=-1, keepdims=True)


def tangent_frames(points):
    """Deterministic orthonormal frames of the tangent spaces, (P, n, n-1).

    The coordinate axis with the largest |x_k| (lowest index on ties) is
    dropped and the other axes are orthonormalized against x in index
    order. Near a coordinate pole this drops the pole axis, so the frame
    stays well conditioned everywhere.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    n = points.shape[-1]
    dropped = np.argmax(np.abs(points), axis=-1)
    kept_axes = np.array([[j for j in range(n) if j != k] for k in range(n)])
    axes = np.eye(n)[kept_axes[dropped]].transpose(0, 2, 1)
    matrices = np.concatenate([points[:, :, None], axes], axis=2)
    q, r = np.linalg.qr(matrices)
    signs = np.sign(np.diagonal(r, axis1=1, axis2=2))
    signs[signs == 0] = 1
    q = q * signs[:, None, :]
    return q[:, :, 1:]


def haar_tangent_frames(points, rank, rng):
    """Uniformly random orthonormal r-frames of the tangent spaces."""
    points = np.atleast_2d(points)
    gaussian = rng.standard_normal(points.shape + (rank,))
    q, r = np.linalg.qr(project_tangent(points, gaussian))
    signs = np.sign(np.diagonal(r, axis1=1, axis2=2))
    signs[signs == 0] = 1
    return q * signs[:, None, :]


def antipodal_quotient(points):
    """Canonical representatives of points of RP^d = S^d / (x ~ -x).

    The representative has its first coordinate with |x_k| > 1e-12
    positive.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    significant = np.abs(points) > 1e-12
    first = np.argmax(significant, axis=1)
    signs = np.sign(points[np.arange(len(points)), first])
    signs[signs == 0] = 1
    return points * signs[:, None]
