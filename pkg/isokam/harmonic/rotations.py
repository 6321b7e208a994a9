"""Rotation matrices on harmonic blocks and the averaging operators."""

import numpy as np

from ..liegroup import GroupElement, DimensionMismatch
from .spherical_harmonics import fitting_panel, real_spherical_harmonics


def _as_element(g):
    return g if isinstance(g, GroupElement) else GroupElement(g)


def wigner_block(g, degree):
    """Orthogonal matrix M(g) of the rotation g on degree-l harmonics.

    ``M(g) @ c`` gives the coefficients of x -> phi(g^-1 x) when ``c`` are
    those of phi, so that M(gh) = M(g) M(h). The matrix is obtained by fitting
    the rotated harmonics on an over-determined point panel.
    """
    g = _as_element(g)
    if g.dim != 3:
        raise DimensionMismatch([g.dim, 3])
    if degree == 0:
        return np.ones((1, 1))
    points, pseudo_inverse = fitting_panel(degree)
    # Rows of points @ g are the points g^T x = g^-1 x.
    return pseudo_inverse @ real_spherical_harmonics(degree, points @ g.mat)


def averaging_block(S, degree):
    """M_l = (1/m) sum of the wigner blocks of the tuple's elements."""
    return np.mean([wigner_block(g, degree) for g in S], axis=0)


def koopman_block(S, degree):
    """Block of the Koopman average phi -> (1/m) sum phi o g_i.

    This is the transpose of ``averaging_block`` since phi o g has the
    coefficients M(g^-1) c = M(g)^T c.
    """
    return averaging_block(S, degree).T


def vector_averaging_operator(S, degree):
    """Matrix of the push-forward average X -> (1/m) sum (g_i)_* X.

    It acts on the row-major flattening of a degree-l channel matrix C of
    shape (2l+1, 3), where (g_* X) has the channel matrix M(g) C g^T.
    """
    return np.mean([np.kron(wigner_block(g, degree), g.mat) for g in S], axis=0)


def radial_coefficients():
    """Degree-1 channel matrix of the radial field x -> x.

    This field is fixed by every push-forward, so it spans a kernel of
    I - L in the vector channels.
    """
    points, pseudo_inverse = fitting_panel(1)
    return pseudo_inverse @ points


def apply_averaging(S, X):
    """Apply the Koopman average to scalar coefficients, or the push-forward
    average to vector-channel coefficients."""
    if X.channel == "scalar":
        return X.map_blocks(lambda degree, block: koopman_block(S, degree) @ block)

    def average_channel_block(degree, block):
        return np.mean(
            [wigner_block(g, degree) @ block @ g.mat.T for g in S], axis=0
        )

    return X.map_blocks(average_channel_block)


def rotate_coefficients(g, X):
    """Coefficients of phi o g^-1 (scalar) or of g_* X (vector)."""
    g = _as_element(g)
    if X.channel == "scalar":
        return X.map_blocks(lambda degree, block: wigner_block(g, degree) @ block)
    return X.map_blocks(
        lambda degree, block: wigner_block(g, degree) @ block @ g.mat.T
    )
