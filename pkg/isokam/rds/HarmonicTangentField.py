import numpy as np

from .sphere_geometry import normalize, project_tangent

FINITE_DIFFERENCE_STEP = 1e-5


class HarmonicTangentField:
    """Tangent field on S^2 synthesized from vector-channel harmonics.

    The ambient vector field given by the coefficients is projected onto the
    tangent spaces after synthesis. Derivatives are central finite
    differences along great circles.

    Parameters
    ----------

    coeffs
      HarmonicCoeffs with channel "vector".
    """

    def __init__(self, coeffs):
        if coeffs.channel != "vector":
            raise ValueError("A tangent field needs vector-channel coefficients.")
        self.coeffs = coeffs

    dim = 2
    ambient_dim = 3

    def evaluate(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return project_tangent(points, self.coeffs.evaluate(points))

    __call__ = evaluate

    def derivative(self, points, directions, step=FINITE_DIFFERENCE_STEP):
        """Derivatives DY(x) u for tangent directions u, array (P, 3, k)."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        columns = []
        for j in range(directions.shape[2]):
            u = directions[:, :, j]
            forward = self.evaluate(normalize(points + step * u))
            backward = self.evaluate(normalize(points - step * u))
            columns.append((forward - backward) / (2 * step))
        return np.stack(columns, axis=2)

    def scaled(self, factor):
        return HarmonicTangentField(factor * self.coeffs)

    def __neg__(self):
        return self.scaled(-1)

    def to_dict(self):
        return {"harmonic": self.coeffs.to_dict()}

    def __repr__(self):
        return "HarmonicTangentField(l_max=%d)" % self.coeffs.l_max
