import numpy as np

from .errors import RankDeficient

ORTHONORMALITY_TOLERANCE = 1e-12


class SubspaceFrame:
    """An r-dimensional subspace of R^n given by an orthonormal basis.

    Parameters
    ----------

    matrix
      Array (n, r) whose columns are orthonormal (checked to 1e-12). Use
      ``SubspaceFrame.from_basis`` for an arbitrary basis.
    """

    def __init__(self, matrix, check=True):
        matrix = np.array(matrix, dtype=float)
        if matrix.ndim == 1:
            matrix = matrix[:, None]
        if check:
            defect = np.max(np.abs(matrix.T @ matrix - np.eye(matrix.shape[1])))
            if defect > ORTHONORMALITY_TOLERANCE:
                raise ValueError(
                    "Frame columns are not orthonormal (defect %.2e), "
                    "use SubspaceFrame.from_basis" % defect
                )
        matrix.setflags(write=False)
        self.matrix = matrix

    @classmethod
    def from_basis(cls, basis):
        """Orthonormalize the columns of any full-rank basis (QR)."""
        basis = np.asarray(basis, dtype=float)
        if basis.ndim == 1:
            basis = basis[:, None]
        q, r = np.linalg.qr(basis)
        diagonal = np.abs(np.diag(r))
        if np.prod(diagonal) ** 2 < 1e-300:
            raise RankDeficient(float(np.prod(diagonal) ** 2))
        return cls(q * np.sign(np.diag(r)), check=False)

    @classmethod
    def coordinate(cls, n, r):
        """span(e_1, ..., e_r)."""
        return cls(np.eye(n)[:, :r], check=False)

    @property
    def n(self):
        return self.matrix.shape[0]

    @property
    def rank(self):
        return self.matrix.shape[1]

    @property
    def projector(self):
        return self.matrix @ self.matrix.T

    def cos2_with(self, vector):
        """Squared cosine of the angle between the subspace and a vector."""
        vector = np.asarray(vector, dtype=float)
        return float(np.sum((self.matrix.T @ vector) ** 2) / np.sum(vector ** 2))

    def __repr__(self):
        return "SubspaceFrame(n=%d, r=%d)" % (self.n, self.rank)
