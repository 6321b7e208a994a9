import numpy as np

from .errors import NotInGroup, DimensionMismatch


class GroupElement:
    """A rotation of the sphere S^d, i.e. an element of SO(d+1).

    Instances are immutable: the matrix is copied at construction and made
    read-only.

    Parameters
    ----------

    mat
      Square (d+1)x(d+1) matrix, orthogonal with determinant +1.

    check
      If True, the matrix is checked against the tolerance (1e-10 on the
      Frobenius norm of M^T M - I and on the determinant). Internal products
      of checked elements skip the check.
    """

    tolerance = 1e-10

    def __init__(self, mat, check=True):
        mat = np.array(mat, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("Expected a square matrix, got shape %s" % (mat.shape,))
        if check:
            self._check_matrix(mat)
        mat.setflags(write=False)
        self.mat = mat

    @staticmethod
    def _check_matrix(mat):
        identity = np.eye(mat.shape[0])
        defect = np.linalg.norm(mat.T @ mat - identity)
        determinant = np.linalg.det(mat)
        tolerance = GroupElement.tolerance
        if (defect > tolerance) or (abs(determinant - 1) > tolerance):
            raise NotInGroup(defect, determinant)

    @property
    def dim(self):
        """Ambient dimension d+1."""
        return self.mat.shape[0]

    @property
    def sphere_dim(self):
        """Dimension d of the sphere the element acts on."""
        return self.dim - 1

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim), check=False)

    @classmethod
    def plane_rotation(cls, dim, i, j, angle):
        """Rotation by ``angle`` in the (e_i, e_j) plane, moving e_i towards e_j.

        In 3D, ``plane_rotation(3, 0, 1, t)`` is R_z(t) and
        ``plane_rotation(3, 1, 2, t)`` is R_x(t).
        """
        mat = np.eye(dim)
        c, s = np.cos(angle), np.sin(angle)
        mat[i, i] = mat[j, j] = c
        mat[j, i] = s
        mat[i, j] = -s
        return cls(mat, check=False)

    def inverse(self):
        return GroupElement(self.mat.T, check=False)

    def __matmul__(self, other):
        if isinstance(other, GroupElement):
            if other.dim != self.dim:
                raise DimensionMismatch([self.dim, other.dim])
            return GroupElement(self.mat @ other.mat, check=False)
        return self.mat @ np.asarray(other)

    def apply(self, points):
        """Rotate points given as an array of shape (..., d+1)."""
        return np.asarray(points) @ self.mat.T

    def allclose(self, other, atol=1e-10):
        other = other.mat if isinstance(other, GroupElement) else np.asarray(other)
        return other.shape == self.mat.shape and np.allclose(self.mat, other, atol=atol)

    def to_list(self):
        return self.mat.tolist()

    def __repr__(self):
        return "GroupElement(dim=%d, mat=%s)" % (self.dim, np.array2string(self.mat))
