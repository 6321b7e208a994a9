import numpy as np


def split_strain(pullback):
    """Return (E, E_C, E_NC) for pullback metrics in orthonormal frames.

    E = (f*g - g)/2, E_C = (Tr E / d) g and E_NC = E - E_C, so that
    E = E_C + E_NC and Tr E_NC = 0 hold exactly. Works on stacks (..., d, d).
    """
    pullback = np.asarray(pullback, dtype=float)
    d = pullback.shape[-1]
    identity = np.eye(d)
    E = (pullback - identity) / 2
    E = (E + np.swapaxes(E, -1, -2)) / 2
    trace = np.trace(E, axis1=-2, axis2=-1)
    E_C = trace[..., None, None] / d * identity
    return E, E_C, E - E_C


class StrainSample:
    """Strain tensors of a map at one point, in orthonormal frames.

    Parameters
    ----------

    point
      The point x of S^d.

    pullback
      The matrix of f*g at x (J^T J for the Jacobian J in frames).
    """

    def __init__(self, point, pullback):
        self.point = np.asarray(point, dtype=float)
        self.pullback = np.asarray(pullback, dtype=float)
        self.E, self.E_C, self.E_NC = split_strain(self.pullback)

    @property
    def dim(self):
        return len(self.E)

    @property
    def trace(self):
        return float(np.trace(self.E))

    @property
    def norm_sq(self):
        return float(np.sum(self.E ** 2))

    @property
    def conformal_norm_sq(self):
        return float(np.sum(self.E_C ** 2))

    @property
    def non_conformal_norm_sq(self):
        return float(np.sum(self.E_NC ** 2))

    def to_dict(self):
        return {
            "point": self.point,
            "pullback": self.pullback,
            "E": self.E,
            "E_C": self.E_C,
            "E_NC": self.E_NC,
        }

    def __repr__(self):
        return "StrainSample(|E|^2=%.3e, |E_C|^2=%.3e, |E_NC|^2=%.3e)" % (
            self.norm_sq,
            self.conformal_norm_sq,
            self.non_conformal_norm_sq,
        )
