import numpy as np

from ..liegroup import GroupElement
from .SphereMap import SphereMap
from .sphere_geometry import sinc, sphere_exp


def _exp_derivative_factor(t):
    """(t cos t - sin t) / t^3, with its Taylor series near 0."""
    t = np.asarray(t, dtype=float)
    small = t < 1e-3
    safe_t = np.where(small, 1.0, t)
    exact = (safe_t * np.cos(safe_t) - np.sin(safe_t)) / safe_t ** 3
    series = -1.0 / 3 + t ** 2 / 30
    return np.where(small, series, exact)


class PerturbedMap(SphereMap):
    """The map f(x) = exp_{Rx}(Y(Rx)) = psi_Y(R x).

    Parameters
    ----------

    rotation
      GroupElement R (or matrix) of the isometry being perturbed.

    field
      Tangent field Y with ``evaluate`` and ``derivative`` methods
      (TangentField or HarmonicTangentField). None means the zero field.
    """

    def __init__(self, rotation, field=None):
        if not isinstance(rotation, GroupElement):
            rotation = GroupElement(rotation)
        self.rotation = rotation
        self.field = field
        if field is not None and field.ambient_dim != rotation.dim:
            raise ValueError(
                "Field on R^%d and rotation of R^%d" % (field.ambient_dim, rotation.dim)
            )

    @property
    def dim(self):
        return self.rotation.dim - 1

    @property
    def is_isometry(self):
        return self.field is None

    def apply(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        rotated = points @ self.rotation.mat.T
        if self.field is None:
            return rotated
        return sphere_exp(rotated, self.field.evaluate(rotated))

    def differential(self, points, vectors):
        """Analytic differential through the chain rule.

        With y = Rx, v = Y(y) and t = |v|, the derivative of
        F(y) = cos(t) y + sinc(t) v along u is
        cos(t) u + sinc(t) DY u - sinc(t) y <v, DY u> + h(t) v <v, DY u>
        with h(t) = (t cos t - sin t) / t^3.
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        rotated = points @ self.rotation.mat.T
        rotated_vectors = self.rotation.mat @ vectors
        if self.field is None:
            return rotated_vectors
        v = self.field.evaluate(rotated)
        t = np.linalg.norm(v, axis=1)
        dv = self.field.derivative(rotated, rotated_vectors)
        v_dv = np.einsum("pn,pnk->pk", v, dv)
        return (
            np.cos(t)[:, None, None] * rotated_vectors
            + sinc(t)[:, None, None] * dv
            - (sinc(t)[:, None] * v_dv)[:, None, :] * rotated[:, :, None]
            + (_exp_derivative_factor(t)[:, None] * v_dv)[:, None, :] * v[:, :, None]
        )

    def with_field(self, field):
        return PerturbedMap(self.rotation, field)

    def to_dict(self):
        data = {"rotation": self.rotation.to_list()}
        if self.field is not None:
            data["field"] = self.field.to_dict()
        return data

    def __repr__(self):
        return "PerturbedMap(dim=%d, field=%s)" % (self.dim, self.field)
