import numpy as np

from .sphere_geometry import normalize, tangent_frames

FINITE_DIFFERENCE_STEP = 1e-5


class SphereMap:
    """Base class of the smooth maps S^d -> S^d acted on by the simulations.

    Subclasses implement ``apply``. The differential defaults to central
    finite differences along great circles; subclasses with a closed form
    override ``differential``.
    """

    dim = None

    @property
    def ambient_dim(self):
        return self.dim + 1

    def apply(self, points):
        raise NotImplementedError()

    def __call__(self, points):
        return self.apply(points)

    def differential(self, points, vectors):
        """Images Df_x u of tangent vectors, array (P, n, k)."""
        return self.differential_fd(points, vectors)

    def differential_fd(self, points, vectors, step=FINITE_DIFFERENCE_STEP):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        columns = []
        for j in range(vectors.shape[2]):
            u = vectors[:, :, j]
            forward = self.apply(normalize(points + step * u))
            backward = self.apply(normalize(points - step * u))
            columns.append((forward - backward) / (2 * step))
        return np.stack(columns, axis=2)

    def jacobian(self, points, frames=None):
        """Matrices (P, d, d) of Df in the tangent frames at x and f(x).

        ``frames`` defaults to the deterministic ``tangent_frames``.
        """
        return self._jacobian(points, frames, self.differential)

    def jacobian_fd(self, points, frames=None, step=FINITE_DIFFERENCE_STEP):
        """Finite-difference version of ``jacobian`` (central, step 1e-5)."""

        def differential(points, vectors):
            return self.differential_fd(points, vectors, step=step)

        return self._jacobian(points, frames, differential)

    def _jacobian(self, points, frames, differential):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if frames is None:
            frames = tangent_frames(points)
        images = normalize(self.apply(points))
        image_frames = tangent_frames(images)
        return image_frames.transpose(0, 2, 1) @ differential(points, frames)
