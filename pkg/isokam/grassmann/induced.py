"""The map induced by a sphere map on bundles of tangent r-planes."""

import numpy as np
from scipy.linalg import subspace_angles

from .SubspaceFrame import SubspaceFrame
from .determinants import log_gram_volume


def orthonormalize(images):
    """QR of stacked images (P, n, r) with positive diagonal."""
    q, r = np.linalg.qr(images)
    signs = np.sign(np.diagonal(r, axis1=-2, axis2=-1))
    signs[signs == 0] = 1
    return q * signs[..., None, :]


def push_frames(f, points, frames):
    """Move tangent r-frames along a sphere map.

    Parameters
    ----------

    f
      A sphere map with ``apply`` and ``differential``.

    points
      Array (P, n) of base points.

    frames
      Array (P, n, r) of orthonormal tangent frames at the points.

    Returns (images, new_frames, log_dets) where new_frames spans
    Df(E) at f(x) and log_dets are ln det(Df | E).
    """
    images = f.apply(points)
    pushed = f.differential(points, frames)
    return images, orthonormalize(pushed), log_gram_volume(pushed)


def induced_map(f, x, E):
    """(f(x), D_x f(E)) for a point and a SubspaceFrame of ambient vectors."""
    x = np.asarray(x, dtype=float)
    image, frame, _ = push_frames(f, x[None, :], E.matrix[None])
    return image[0], SubspaceFrame(frame[0], check=False)


def chart_induced_map(J, A):
    """Induced map in the graph chart around P = span(e_1, ..., e_r).

    A subspace is the graph {v + A v : v in P} of a matrix A of shape
    (d - r, r). Its image under J is the graph of
    A' = J I_A (pi_P J I_A)^-1 - Id, returned as a (d - r, r) matrix.
    """
    J, A = np.asarray(J, dtype=float), np.asarray(A, dtype=float)
    r = A.shape[1]
    graph = np.vstack([np.eye(r), A])
    image = J @ graph
    normalized = image @ np.linalg.inv(image[:r])
    return normalized[r:]


def chart_frame(A):
    """SubspaceFrame of the graph of A in the chart around span(e_1..e_r)."""
    A = np.asarray(A, dtype=float)
    return SubspaceFrame.from_basis(np.vstack([np.eye(A.shape[1]), A]))


def principal_angles(E, F):
    """Principal angles between two subspaces (frames or basis matrices)."""
    E = E.matrix if isinstance(E, SubspaceFrame) else np.asarray(E)
    F = F.matrix if isinstance(F, SubspaceFrame) else np.asarray(F)
    return np.sort(subspace_angles(E, F))
