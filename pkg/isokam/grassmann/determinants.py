"""Subspace determinants det(L, g1, g2 | E) and Haar sampling of r-planes."""

import numpy as np

from ..tools import make_rng
from .errors import RankDeficient
from .SubspaceFrame import SubspaceFrame

LOG_UNDERFLOW = np.log(1e-300)


def _basis_matrix(E):
    if isinstance(E, SubspaceFrame):
        return E.matrix
    E = np.asarray(E, dtype=float)
    return E[..., :, None] if E.ndim == 1 else E


def log_gram_volume(vectors, metric=None):
    """Half the log of Det <v_i, v_j>_g for stacks of column vectors.

    Raises RankDeficient if the Gram determinant is below 1e-300.
    """
    vectors = np.asarray(vectors, dtype=float)
    if metric is None:
        gram = np.swapaxes(vectors, -1, -2) @ vectors
    else:
        gram = np.swapaxes(vectors, -1, -2) @ metric @ vectors
    sign, log_det = np.linalg.slogdet(gram)
    bad = (sign <= 0) | (log_det < LOG_UNDERFLOW)
    if np.any(bad):
        worst = np.min(np.where(sign > 0, log_det, -np.inf))
        raise RankDeficient(float(np.exp(worst)))
    return 0.5 * log_det


def log_subspace_det(L, E, g1=None, g2=None):
    """ln det(L, g1, g2 | E), batched over stacks of frames.

    Parameters
    ----------

    L
      Matrix (n, n), or a stack (S, n, n).

    E
      SubspaceFrame, basis matrix (n, r) or stack of bases (S, n, r). The
      result does not depend on which basis of E is given.

    g1, g2
      Symmetric positive definite metrics on the source and target (the
      identity when None).
    """
    basis = _basis_matrix(E)
    return log_gram_volume(np.asarray(L) @ basis, g2) - log_gram_volume(basis, g1)


def subspace_det(L, E, g1=None, g2=None):
    """det(L, g1, g2 | E) = sqrt(Det<L v_i, L v_j>_g2 / Det<v_i, v_j>_g1)."""
    return float(np.exp(log_subspace_det(L, E, g1, g2)))


def haar_frames(n, r, size, rng):
    """Stack (size, n, r) of orthonormal frames of Haar-random r-planes."""
    if not 1 <= r <= n:
        raise ValueError("Need 1 <= r <= n, got r=%d, n=%d" % (r, n))
    q, upper = np.linalg.qr(rng.standard_normal((size, n, r)))
    signs = np.sign(np.diagonal(upper, axis1=1, axis2=2))
    signs[signs == 0] = 1
    return q * signs[:, None, :]


def haar_grassmannian(n, r, seed):
    """A Haar-random r-plane of R^n (orthonormalized Gaussian matrix)."""
    return SubspaceFrame(haar_frames(n, r, 1, make_rng(seed))[0], check=False)
