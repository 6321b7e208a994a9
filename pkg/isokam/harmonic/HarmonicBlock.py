import numpy as np

from .spherical_harmonics import casimir, real_spherical_harmonics
from .rotations import wigner_block


class HarmonicBlock:
    """The (2l+1)-dimensional space of degree-l spherical harmonics on S^2.

    Parameters
    ----------

    degree
      The degree l >= 0. The Casimir value is l(l+1), the Laplace-Beltrami
      eigenvalue, so c_0 = 0 and c_l is strictly increasing.
    """

    def __init__(self, degree):
        degree = int(degree)
        if degree < 0:
            raise ValueError("Harmonic degrees are >= 0, got %d" % degree)
        self.degree = degree

    @property
    def dim(self):
        return 2 * self.degree + 1

    @property
    def casimir(self):
        return casimir(self.degree)

    @property
    def orders(self):
        return np.arange(-self.degree, self.degree + 1)

    def evaluate(self, points):
        """Values of the block's basis at the points, array (P, 2l+1)."""
        return real_spherical_harmonics(self.degree, points)

    def rotation(self, g):
        """Orthogonal matrix of the rotation g acting on this block."""
        return wigner_block(g, self.degree)

    def __eq__(self, other):
        return isinstance(other, HarmonicBlock) and other.degree == self.degree

    def __hash__(self):
        return hash(("HarmonicBlock", self.degree))

    def __repr__(self):
        return "HarmonicBlock(degree=%d)" % self.degree
