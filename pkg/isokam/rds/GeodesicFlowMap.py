import numpy as np

from ..liegroup import GroupElement
from .PerturbedMap import PerturbedMap
from .SphereMap import SphereMap
from .sphere_geometry import (
    sphere_exp,
    sphere_log,
    project_tangent,
    normalize,
    tangent_frames,
)
from .errors import InversionNotConverged


class GeodesicFlowMap(PerturbedMap):
    """Time-one map psi_V(x) = exp_x(V(x)) of a tangent field."""

    def __init__(self, field):
        PerturbedMap.__init__(self, GroupElement.identity(field.ambient_dim), field)

    def inverse(self, **kwargs):
        return InverseGeodesicFlowMap(self.field, **kwargs)

    def __repr__(self):
        return "GeodesicFlowMap(%s)" % self.field


class InverseGeodesicFlowMap(SphereMap):
    """Inverse of psi_V computed point by point by fixed-point iteration.

    Starting from y = exp_x(-V(x)), the iteration y <- exp_y(P_y log_z(x))
    with z = psi_V(y) is run until |log_z(x)| <= tolerance.

    Parameters
    ----------

    field
      The tangent field V, C1-small.

    tolerance
      Target for the largest residual |log_{psi_V(y)}(x)| over the points.

    max_iterations
      InversionNotConverged is raised past this number of iterations.
    """

    def __init__(self, field, tolerance=1e-13, max_iterations=50):
        self.field = field
        self.forward = GeodesicFlowMap(field)
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.last_residual = None

    @property
    def dim(self):
        return self.field.ambient_dim - 1

    def apply(self, points):
        points = normalize(np.atleast_2d(np.asarray(points, dtype=float)))
        guesses = normalize(sphere_exp(points, -self.field.evaluate(points)))
        residual = np.inf
        for _ in range(self.max_iterations):
            corrections = sphere_log(self.forward.apply(guesses), points)
            residual = float(np.max(np.linalg.norm(corrections, axis=1)))
            if residual <= self.tolerance:
                self.last_residual = residual
                return guesses
            guesses = normalize(sphere_exp(guesses, project_tangent(guesses, corrections)))
        raise InversionNotConverged(residual, self.max_iterations)

    def differential(self, points, vectors):
        """Solves D psi_V(y) w = u in tangent frames, with y = psi_V^-1(x)."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        preimages = self.apply(points)
        source_frames = tangent_frames(preimages)
        target_frames = tangent_frames(points)
        forward_jacobian = target_frames.transpose(0, 2, 1) @ self.forward.differential(
            preimages, source_frames
        )
        coordinates = target_frames.transpose(0, 2, 1) @ vectors
        return source_frames @ np.linalg.solve(forward_jacobian, coordinates)

    def __repr__(self):
        return "InverseGeodesicFlowMap(%s)" % self.field
