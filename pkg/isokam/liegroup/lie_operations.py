import numpy as np
import scipy.linalg

from ..tools import make_rng
from .GroupElement import GroupElement
from .errors import SingularInput, LogUndefined, DimensionMismatch

ANTIPODAL_TOLERANCE = 1e-9
SINGULAR_TOLERANCE = 1e-12


def _as_matrix(g):
    return g.mat if isinstance(g, GroupElement) else np.asarray(g, dtype=float)


def project_to_group(A):
    """Return the special orthogonal polar factor of A.

    With A = U S V^T, this is U V^T, where the last column of V (smallest
    singular value) is negated when needed to get determinant +1.
    """
    A = _as_matrix(A)
    U, singular_values, Vt = np.linalg.svd(A)
    if singular_values.min() < SINGULAR_TOLERANCE:
        raise SingularInput(singular_values.min())
    if np.linalg.det(U) * np.linalg.det(Vt) < 0:
        Vt = Vt.copy()
        Vt[-1] *= -1
    return GroupElement(U @ Vt)


def exp_so(X):
    """Matrix exponential of a skew-symmetric matrix, as a GroupElement."""
    X = np.asarray(X, dtype=float)
    asymmetry = np.linalg.norm(X + X.T)
    if asymmetry > 1e-10 * max(1.0, np.linalg.norm(X)):
        raise ValueError("exp_so expects a skew-symmetric matrix.")
    return GroupElement(scipy.linalg.expm(X))


def log_so(g):
    """Principal logarithm of a rotation, as a skew-symmetric matrix.

    Raises LogUndefined when the rotation has an eigenvalue within 1e-9 of
    -1, where the principal branch is not defined.
    """
    mat = _as_matrix(g)
    eigenvalue_gap = np.min(np.abs(np.linalg.eigvals(mat) + 1))
    if eigenvalue_gap < ANTIPODAL_TOLERANCE:
        raise LogUndefined(eigenvalue_gap)
    X = np.real(scipy.linalg.logm(mat))
    return (X - X.T) / 2


def _check_same_dim(g, h):
    if _as_matrix(g).shape != _as_matrix(h).shape:
        raise DimensionMismatch([_as_matrix(g).shape[0], _as_matrix(h).shape[0]])


def distance(g, h):
    """Bi-invariant distance |log(g^T h)|_F between two rotations."""
    _check_same_dim(g, h)
    return float(np.linalg.norm(log_so(_as_matrix(g).T @ _as_matrix(h))))


def so_diameter(n):
    """Largest distance between two rotations of SO(n): pi sqrt(2 floor(n/2)).

    It is reached by a half-turn in each of floor(n/2) orthogonal planes.
    """
    return float(np.pi * np.sqrt(2 * (n // 2)))


def distance_with_fallback(g, h):
    """Return (distance, is_chordal).

    Falls back to the chordal distance |g - h|_F when the principal log of
    g^T h is undefined.
    """
    try:
        return distance(g, h), False
    except LogUndefined:
        return float(np.linalg.norm(_as_matrix(g) - _as_matrix(h))), True


def batch_distance(A, B):
    """Distances between stacks of rotation matrices, broadcasting over stacks.

    Uses the eigenvalue phases of A^T B: |log(A^T B)|_F^2 = sum_j arg(z_j)^2.
    Half-turns get the distance of the angle pi instead of raising.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    products = np.swapaxes(A, -1, -2) @ B
    phases = np.angle(np.linalg.eigvals(products))
    return np.sqrt(np.sum(phases ** 2, axis=-1))


def haar_samples(dim, n_samples, seed):
    """Array of shape (n_samples, dim, dim) of Haar-distributed rotations.

    Each sample is the Q factor of a Gaussian matrix, with columns signed so
    that R has a positive diagonal (Haar on O(n)); samples with determinant
    -1 get their first column negated (Haar on SO(n)).
    """
    if dim < 2:
        raise ValueError("Haar sampling needs dim >= 2, got %d" % dim)
    rng = make_rng(seed)
    gaussian = rng.standard_normal((n_samples, dim, dim))
    Q, R = np.linalg.qr(gaussian)
    signs = np.sign(np.diagonal(R, axis1=-2, axis2=-1))
    signs[signs == 0] = 1
    Q = Q * signs[:, None, :]
    negative = np.linalg.det(Q) < 0
    Q[negative, :, 0] *= -1
    return Q


def haar_sample(dim, seed):
    """One Haar-distributed rotation of R^dim, deterministic given the seed."""
    return GroupElement(haar_samples(dim, 1, seed)[0])


def random_skew(dim, norm, seed):
    """Random skew-symmetric matrix with the given Frobenius norm."""
    rng = make_rng(seed)
    A = rng.standard_normal((dim, dim))
    X = A - A.T
    return norm * X / np.linalg.norm(X)


def hat(vector):
    """Skew matrix of a 3-vector (cross product matrix)."""
    x, y, z = vector
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def vee(X):
    """Inverse of hat() for 3x3 skew matrices."""
    return np.array([X[2, 1], X[0, 2], X[1, 0]])
