import numpy as np

from .GroupElement import GroupElement
from .errors import DimensionMismatch
from .lie_operations import haar_sample

# 2*pi times the inverse golden ratio, the "most irrational" rotation angle.
GOLDEN_ANGLE = 2 * np.pi * (np.sqrt(5) - 1) / 2


class GeneratorTuple:
    """An ordered tuple (g_1, ..., g_m) of rotations sharing one dimension.

    The averaging operators built on a tuple give each element the weight
    1/m.

    Parameters
    ----------

    elems
      List of GroupElement instances (or square matrices).
    """

    def __init__(self, elems):
        elems = [e if isinstance(e, GroupElement) else GroupElement(e) for e in elems]
        if len(elems) == 0:
            raise ValueError("A generator tuple needs at least one element.")
        dims = sorted(set(e.dim for e in elems))
        if len(dims) > 1:
            raise DimensionMismatch(dims)
        self.elems = tuple(elems)

    @property
    def m(self):
        return len(self.elems)

    @property
    def dim(self):
        return self.elems[0].dim

    @property
    def matrices(self):
        """Array of shape (m, dim, dim)."""
        return np.array([e.mat for e in self.elems])

    def __len__(self):
        return len(self.elems)

    def __getitem__(self, index):
        return self.elems[index]

    def __iter__(self):
        return iter(self.elems)

    def symmetrized(self):
        """Return (S ∪ S^-1, letters).

        ``letters[k] = (i, sign)`` tells which generator and power the k-th
        element of the symmetrized tuple stands for.
        """
        letters = [(i, 1) for i in range(self.m)] + [(i, -1) for i in range(self.m)]
        elems = list(self.elems) + [e.inverse() for e in self.elems]
        return GeneratorTuple(elems), letters

    @classmethod
    def reference_pair(cls, angle=GOLDEN_ANGLE):
        """Rotations by the golden angle about the z and x axes of R^3."""
        return cls(
            [
                GroupElement.plane_rotation(3, 0, 1, angle),
                GroupElement.plane_rotation(3, 1, 2, angle),
            ]
        )

    @classmethod
    def random(cls, dim, m, seed):
        """Tuple of m independent Haar rotations of R^dim."""
        seeds = np.random.SeedSequence(seed).spawn(m)
        return cls([haar_sample(dim, s) for s in seeds])

    def __repr__(self):
        return "GeneratorTuple(m=%d, dim=%d)" % (self.m, self.dim)
