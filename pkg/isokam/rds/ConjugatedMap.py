import numpy as np

from .SphereMap import SphereMap
from .GeodesicFlowMap import GeodesicFlowMap, InverseGeodesicFlowMap


class ConjugatedMap(SphereMap):
    """The conjugated map psi_V o f o psi_V^-1.

    Parameters
    ----------

    base_map
      The sphere map f being conjugated.

    field
      The tangent field V of the conjugacy psi_V.
    """

    def __init__(self, base_map, field, tolerance=1e-13, max_iterations=50):
        self.base_map = base_map
        self.field = field
        self.flow = GeodesicFlowMap(field)
        self.inverse_flow = InverseGeodesicFlowMap(
            field, tolerance=tolerance, max_iterations=max_iterations
        )

    @property
    def dim(self):
        return self.base_map.dim

    @property
    def rotation(self):
        """The rotation perturbed by the base map."""
        return self.base_map.rotation

    def apply(self, points):
        return self.flow.apply(self.base_map.apply(self.inverse_flow.apply(points)))

    def differential(self, points, vectors):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        preimages = self.inverse_flow.apply(points)
        vectors = self.inverse_flow.differential(points, vectors)
        images = self.base_map.apply(preimages)
        vectors = self.base_map.differential(preimages, vectors)
        return self.flow.differential(images, vectors)

    def __repr__(self):
        return "ConjugatedMap(%s, %s)" % (self.base_map, self.field)
