import numpy as np

from ..tools import batch_means
from .sphere_geometry import antipodal_quotient


class EmpiricalMeasure:
    """Occupation measure of orbits after burn-in, with uniform weights.

    Parameters
    ----------

    points
      Array (T, W, n): positions of W walkers over T recorded steps.

    burn_in
      Number of steps discarded before recording.

    seed
      Seed of the run.
    """

    def __init__(self, points, burn_in=0, seed=None):
        points = np.asarray(points, dtype=float)
        if points.ndim == 2:
            points = points[:, None, :]
        self.history = points
        self.burn_in = burn_in
        self.seed = seed

    @property
    def points(self):
        """All recorded points, array (T * W, n)."""
        return self.history.reshape((-1, self.history.shape[-1]))

    @property
    def weights(self):
        n = len(self.points)
        return np.full(n, 1.0 / n)

    @property
    def n_steps(self):
        return self.history.shape[0]

    @property
    def n_walkers(self):
        return self.history.shape[1]

    def integrate(self, function, n_batches=20):
        """Return (mean, standard error) of function(points) under the measure.

        ``function`` maps an array (P, n) of points to P values. The error
        comes from batch means over time of the walker averages.
        """
        values = np.asarray(function(self.points), dtype=float)
        series = values.reshape(self.history.shape[:2]).mean(axis=1)
        if len(series) < n_batches:
            return float(series.mean()), np.nan
        mean, error = batch_means(series, n_batches)
        return float(mean), float(error)

    def on_projective_space(self):
        """The same measure seen on RP^d (x and -x identified)."""
        quotient = antipodal_quotient(self.points).reshape(self.history.shape)
        return EmpiricalMeasure(quotient, burn_in=self.burn_in, seed=self.seed)

    def __repr__(self):
        return "EmpiricalMeasure(steps=%d, walkers=%d, burn_in=%d)" % (
            self.n_steps,
            self.n_walkers,
            self.burn_in,
        )
