"""Real spherical harmonics on S^2 and the point panels used to fit them."""

from functools import lru_cache

import numpy as np

from ..tools import make_rng
from .errors import PanelIllConditioned

try:
    from scipy.special import sph_harm_y

    def _complex_harmonics(degree, orders, polar, azimuth):
        return sph_harm_y(degree, orders, polar, azimuth)


except ImportError:  # scipy < 1.15
    from scipy.special import sph_harm

    def _complex_harmonics(degree, orders, polar, azimuth):
        return sph_harm(orders, degree, azimuth, polar)


MAX_PANEL_CONDITION = 1e6


def casimir(degree):
    """Laplace-Beltrami eigenvalue l(l+1) of the degree-l harmonics."""
    return degree * (degree + 1.0)


def real_spherical_harmonics(degree, points):
    """Evaluate the 2l+1 real harmonics of degree l at points of S^2.

    Columns are ordered by m = -l..l. The harmonics are orthonormal for the
    probability measure on S^2, so Y_00 = 1 and the l = 0 coefficient of a
    function is its mean. In degree 1 the columns are sqrt(3) (y, z, x).

    Parameters
    ----------

    degree
      The degree l >= 0.

    points
      Array (P, 3) of unit vectors.
    """
    points = np.asarray(points, dtype=float).reshape((-1, 3))
    polar = np.arccos(np.clip(points[:, 2], -1, 1))[:, None]
    azimuth = np.arctan2(points[:, 1], points[:, 0])[:, None]
    orders = np.arange(0, degree + 1)[None, :]
    values = _complex_harmonics(degree, orders, polar, azimuth) * np.sqrt(4 * np.pi)
    signs = (-1.0) ** orders
    positive = np.sqrt(2) * signs[:, 1:] * values[:, 1:].real
    negative = np.sqrt(2) * signs[:, 1:] * values[:, 1:].imag
    columns = [negative[:, ::-1], values[:, :1].real, positive]
    return np.hstack(columns)


def fibonacci_panel(n_points):
    """Quasi-uniform deterministic points on S^2 (Fibonacci lattice)."""
    indices = np.arange(n_points) + 0.5
    z = 1 - 2 * indices / n_points
    radius = np.sqrt(1 - z ** 2)
    azimuth = np.pi * (3 - np.sqrt(5)) * indices
    return np.stack([radius * np.cos(azimuth), radius * np.sin(azimuth), z], axis=1)


def haar_sphere_points(dim, n_points, seed):
    """Uniform points on the unit sphere of R^dim (normalized Gaussians)."""
    gaussian = make_rng(seed).standard_normal((n_points, dim))
    return gaussian / np.linalg.norm(gaussian, axis=1, keepdims=True)


def sphere_panel(n_points, kind="fibonacci", seed=0):
    """Point panel on S^2, either "fibonacci" (quadrature-like) or "haar"."""
    if kind == "fibonacci":
        return fibonacci_panel(n_points)
    if kind == "haar":
        return haar_sphere_points(3, n_points, seed)
    raise ValueError("Unknown panel kind %s" % kind)


@lru_cache(maxsize=None)
def fitting_panel(degree):
    """Return (points, pseudo-inverse) used to fit degree-l functions.

    The panel is a Fibonacci lattice with 6(2l+1)+12 points, well above the
    2l+1 unknowns. Raises PanelIllConditioned if the evaluation matrix has a
    condition number above 1e6.
    """
    points = fibonacci_panel(6 * (2 * degree + 1) + 12)
    matrix = real_spherical_harmonics(degree, points)
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    condition = singular_values[0] / singular_values[-1]
    if condition > MAX_PANEL_CONDITION:
        raise PanelIllConditioned(degree, condition)
    pseudo_inverse = np.linalg.pinv(matrix)
    points.setflags(write=False)
    pseudo_inverse.setflags(write=False)
    return points, pseudo_inverse
