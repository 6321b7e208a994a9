from itertools import combinations_with_replacement

import numpy as np

from ..tools import make_rng
from .sphere_geometry import tangent_frames
from ..harmonic import haar_sphere_points

NORM_PANEL_SIZE = 10000
NORM_PANEL_SEED = 0


def monomial_exponents(n_variables, max_degree):
    """Exponent vectors of all monomials of degree <= max_degree."""
    exponents = []
    for degree in range(max_degree + 1):
        for variables in combinations_with_replacement(range(n_variables), degree):
            exponent = np.zeros(n_variables, dtype=int)
            for variable in variables:
                exponent[variable] += 1
            exponents.append(exponent)
    return np.array(exponents)


class TangentField:
    """Tangent field Y(x) = (I - x x^T) P(x) of a polynomial map P on R^n.

    Parameters
    ----------

    exponents
      Integer array (K, n) of monomial exponents.

    coefficients
      Array (K, n): P(x) = sum_k coefficients[k] * prod_j x_j^exponents[k, j].
    """

    def __init__(self, exponents, coefficients):
        exponents = np.array(exponents, dtype=int).reshape((len(exponents), -1))
        coefficients = np.array(coefficients, dtype=float).reshape(exponents.shape)
        if np.any(exponents < 0):
            raise ValueError("Monomial exponents must be nonnegative.")
        exponents.setflags(write=False)
        coefficients.setflags(write=False)
        self.exponents = exponents
        self.coefficients = coefficients
        self._norms = {}

    @property
    def ambient_dim(self):
        return self.exponents.shape[1]

    @property
    def dim(self):
        return self.ambient_dim - 1

    @property
    def degree(self):
        if len(self.exponents) == 0:
            return 0
        return int(self.exponents.sum(axis=1).max())

    @classmethod
    def zero(cls, dim):
        return cls(np.zeros((1, dim + 1), dtype=int), np.zeros((1, dim + 1)))

    @classmethod
    def constant(cls, vector):
        """Field of the constant map P = a, the gradient of x -> <a, x>."""
        vector = np.asarray(vector, dtype=float)
        return cls(np.zeros((1, len(vector)), dtype=int), vector[None, :])

    @classmethod
    def gradient_of_coordinate(cls, dim, index):
        """Gradient of the height function x -> x_index."""
        vector = np.zeros(dim + 1)
        vector[index] = 1.0
        return cls.constant(vector)

    @classmethod
    def killing(cls, skew):
        """Killing field x -> A x of a skew-symmetric matrix A."""
        skew = np.asarray(skew, dtype=float)
        n = len(skew)
        return cls(np.eye(n, dtype=int), skew.T)

    @classmethod
    def random(cls, dim, max_degree=3, scale=1.0, seed=0):
        """Random polynomial field, rescaled so that its C0 norm is ``scale``."""
        rng = make_rng(seed)
        exponents = monomial_exponents(dim + 1, max_degree)
        coefficients = rng.standard_normal(exponents.shape)
        field = cls(exponents, coefficients)
        return field.scaled(scale / field.c0_norm())

    def monomials(self, points):
        """Array (P, K) of the monomials evaluated at the points."""
        points = np.atleast_2d(points)
        return np.prod(points[:, None, :] ** self.exponents[None, :, :], axis=2)

    def polynomial(self, points):
        return self.monomials(points) @ self.coefficients

    def polynomial_jacobian(self, points):
        """Array (P, n, n) of the derivatives dP_a / dx_b."""
        points = np.atleast_2d(points)
        n = self.ambient_dim
        columns = []
        for b in range(n):
            factors = self.exponents[:, b].astype(float)
            lowered = np.maximum(self.exponents - np.eye(n, dtype=int)[b], 0)
            monomials = np.prod(points[:, None, :] ** lowered[None, :, :], axis=2)
            columns.append((monomials * factors) @ self.coefficients)
        return np.stack(columns, axis=2)

    def evaluate(self, points):
        """Field values, array (P, n), tangent at every point."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = self.polynomial(points)
        return values - np.sum(points * values, axis=1, keepdims=True) * points

    __call__ = evaluate

    def ambient_jacobian(self, points):
        """Jacobian (P, n, n) of the extension x -> P(x) - x <x, P(x)>."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = self.polynomial(points)
        jacobian = self.polynomial_jacobian(points)
        radial = np.sum(points * values, axis=1)
        x_dp = np.einsum("pa,pab->pb", points, jacobian)
        return (
            jacobian
            - points[:, :, None] * (values + x_dp)[:, None, :]
            - radial[:, None, None] * np.eye(self.ambient_dim)[None]
        )

    def derivative(self, points, directions):
        """Derivatives DY(x) u for tangent directions u, array (P, n, k)."""
        return self.ambient_jacobian(points) @ directions

    def covariant_derivative(self, points):
        """Matrices F^T DY F of the covariant derivative in tangent frames."""
        frames = tangent_frames(points)
        return frames.transpose(0, 2, 1) @ self.derivative(points, frames)

    def c0_norm(self, n_points=NORM_PANEL_SIZE, seed=NORM_PANEL_SEED):
        """Largest |Y(x)| on a seeded panel of Haar points."""
        key = ("c0", n_points, seed)
        if key not in self._norms:
            points = haar_sphere_points(self.ambient_dim, n_points, seed)
            self._norms[key] = float(np.max(np.linalg.norm(self.evaluate(points), axis=1)))
        return self._norms[key]

    def c1_norm(self, n_points=NORM_PANEL_SIZE, seed=NORM_PANEL_SEED):
        """Largest operator norm of the covariant derivative on the panel."""
        key = ("c1", n_points, seed)
        if key not in self._norms:
            points = haar_sphere_points(self.ambient_dim, n_points, seed)
            norms = np.linalg.norm(self.covariant_derivative(points), ord=2, axis=(1, 2))
            self._norms[key] = float(np.max(norms))
        return self._norms[key]

    def scaled(self, factor):
        return TangentField(self.exponents, factor * self.coefficients)

    def __neg__(self):
        return self.scaled(-1)

    def __add__(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("Cannot add fields on spheres of different dimensions.")
        return TangentField(
            np.vstack([self.exponents, other.exponents]),
            np.vstack([self.coefficients, other.coefficients]),
        )

    def to_dict(self):
        return {
            "exponents": self.exponents.tolist(),
            "coefficients": self.coefficients.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["exponents"], data["coefficients"])

    def __repr__(self):
        return "TangentField(dim=%d, degree=%d, terms=%d)" % (
            self.dim,
            self.degree,
            len(self.exponents),
        )
