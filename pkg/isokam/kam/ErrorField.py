import numpy as np

from ..liegroup import GroupElement
from ..harmonic import HarmonicCoeffs, haar_sphere_points
from ..rds import HarmonicTangentField, sphere_log, geodesic_distance
from .errors import TooFarFromIsometry

INJECTIVITY_MARGIN = 1e-6
PANEL_SEED = 0


def default_panel_size(l_max):
    """Enough points to fit all vector harmonics of degree <= l_max."""
    return max(2000, 4 * (l_max + 1) ** 2)


def _rotation_matrix(R):
    return R.mat if isinstance(R, GroupElement) else np.asarray(R, dtype=float)


def c0_distance(f, g, points=None, n_points=10 ** 4, seed=PANEL_SEED):
    """Largest distance between f(x) and g(x) over a seeded Haar panel.

    ``g`` is a sphere map or a rotation (GroupElement or matrix).
    """
    if points is None:
        points = haar_sphere_points(f.dim + 1, n_points, seed)
    if hasattr(g, "apply") and not isinstance(g, GroupElement):
        reference = g.apply(points)
    else:
        reference = points @ _rotation_matrix(g).T
    return float(np.max(geodesic_distance(f.apply(points), reference)))


class ErrorField:
    """The field Y with exp_{Rx}(Y(Rx)) = f(x), sampled and fitted.

    Parameters
    ----------

    points
      Array (P, n) of the points y = Rx where Y is sampled.

    values
      Array (P, n) of the tangent vectors Y(y).

    coeffs
      Vector-channel HarmonicCoeffs fitting the samples (S^2 only), or None.
    """

    def __init__(self, points, values, coeffs=None):
        self.points = points
        self.values = values
        self.coeffs = coeffs

    @property
    def c0_norm(self):
        """Largest |Y| on the panel: the largest displacement d(f(x), Rx)."""
        return float(np.max(np.linalg.norm(self.values, axis=1)))

    @property
    def fit_residual(self):
        return None if self.coeffs is None else self.coeffs.fit_residual

    def field(self):
        """The fitted field as a HarmonicTangentField."""
        return HarmonicTangentField(self.coeffs)

    def sobolev_norm(self, s):
        return self.coeffs.sobolev_norm(s)

    def __repr__(self):
        return "ErrorField(C0=%.3e, fit_residual=%s)" % (self.c0_norm, self.fit_residual)


def error_field(f, R, l_max=16, points=None, n_points=None, seed=PANEL_SEED):
    """Sample Y(Rx) = log_{Rx} f(x) on a panel and fit it with harmonics.

    Parameters
    ----------

    f
      Sphere map close to the rotation R.

    R
      GroupElement (or matrix) of the reference rotation.

    l_max
      Degree of the harmonic fit (made on S^2 only).

    points
      Panel of points x, defaults to seeded Haar points.

    Raises TooFarFromIsometry if a point is moved by pi or more (up to
    1e-6), beyond the injectivity radius.
    """
    matrix = _rotation_matrix(R)
    if points is None:
        points = haar_sphere_points(
            f.dim + 1, n_points or default_panel_size(l_max), seed
        )
    rotated = points @ matrix.T
    images = f.apply(points)
    displacement = float(np.max(geodesic_distance(rotated, images)))
    limit = np.pi - INJECTIVITY_MARGIN
    if displacement >= limit:
        raise TooFarFromIsometry(displacement, limit)
    values = sphere_log(rotated, images)
    coeffs = None
    if f.dim == 2:
        coeffs = HarmonicCoeffs.from_samples(rotated, values, l_max)
    return ErrorField(rotated, values, coeffs)
