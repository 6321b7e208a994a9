import numpy as np
import pandas
from proglog import default_bar_logger

from ..liegroup import GeneratorTuple
from ..tools import make_rng, batch_means, batch_averages
from ..grassmann import log_gram_volume, orthonormalize
from .errors import NumericalBlowup
from .sphere_geometry import (
    haar_tangent_frames,
    normalize,
    project_tangent,
    tangent_frames,
)
from .LyapunovSpectrum import LyapunovSpectrum
from .EmpiricalMeasure import EmpiricalMeasure

MAX_LOG_FACTOR = 50.0
N_CHECKPOINTS = 100


class RandomDynamicalSystem:
    """Random compositions of sphere maps chosen uniformly at each step.

    Every simulation runs ``n_walkers`` independent walkers stepped together
    (one random map choice per walker and step) and averages over them, so
    that a run of n_steps with W walkers uses n_steps * W map applications.

    Parameters
    ----------

    maps
      List of SphereMap instances (usually PerturbedMap) on the same sphere.
    """

    def __init__(self, maps):
        maps = list(maps)
        if len(maps) == 0:
            raise ValueError("A random dynamical system needs at least one map.")
        dims = sorted(set(f.dim for f in maps))
        if len(dims) > 1:
            raise ValueError("All maps must act on the same sphere, got dims %s" % dims)
        self.maps = maps

    @property
    def m(self):
        return len(self.maps)

    @property
    def dim(self):
        return self.maps[0].dim

    @property
    def ambient_dim(self):
        return self.dim + 1

    @property
    def generators(self):
        """GeneratorTuple of the rotations the maps perturb."""
        return GeneratorTuple([f.rotation for f in self.maps])

    def __len__(self):
        return self.m

    def __getitem__(self, index):
        return self.maps[index]

    def _initial_state(self, x0, rank, n_walkers, rng, frame0=None):
        """Starting points (W, n) and tangent r-frames (W, n, r)."""
        if x0 is None or (isinstance(x0, str) and x0 == "haar"):
            points = normalize(rng.standard_normal((n_walkers, self.ambient_dim)))
            # A full frame is always drawn so that all ranks share the
            # random stream, hence the realization.
            frames = haar_tangent_frames(points, self.dim, rng)
        else:
            x0 = normalize(np.asarray(x0, dtype=float))
            points = np.tile(x0, (n_walkers, 1))
            frames = tangent_frames(points)
        if frame0 is not None:
            frame0 = np.asarray(frame0, dtype=float)
            frames = np.tile(frame0, (n_walkers, 1, 1))
            frames = orthonormalize(project_tangent(points, frames))
        return points, frames[:, :, :rank]

    def _step(self, points, frames, choices):
        new_points = np.empty_like(points)
        new_frames = None if frames is None else np.empty_like(frames)
        for index, f in enumerate(self.maps):
            mask = choices == index
            if not mask.any():
                continue
            new_points[mask] = f.apply(points[mask])
            if frames is not None:
                new_frames[mask] = f.differential(points[mask], frames[mask])
        return new_points, new_frames

    def _chunks(self, total):
        size = max(1, -(-total // N_CHECKPOINTS))
        return [range(start, min(start + size, total)) for start in range(0, total, size)]

    def _propagate(
        self, rank, x0, frame0, n_steps, seed, n_walkers, burn_in, logger, full_det=False
    ):
        """Run the walkers and return the per-step series.

        Returns a dict with ``log_diagonal`` (n_steps, rank), the walker
        averages of ln|R_ii| of the QR factors; ``log_volume`` (n_steps,), the
        walker averages of ln det(Df | E); ``log_det`` (n_steps,) of
        ln|det Df| in tangent frames when ``full_det``; and ``max_drift``.
        """
        logger = default_bar_logger(logger)
        rng = make_rng(seed)
        points, frames = self._initial_state(x0, rank, n_walkers, rng, frame0)
        total = burn_in + n_steps
        log_diagonal = np.zeros((n_steps, rank))
        log_volume = np.zeros(n_steps)
        log_det = np.zeros(n_steps) if full_det else None
        max_drift = 0.0
        for chunk in logger.iter_bar(step=self._chunks(total)):
            for step in chunk:
                choices = rng.integers(self.m, size=n_walkers)
                points, pushed = self._step(points, frames, choices)
                norms = np.linalg.norm(points, axis=1)
                max_drift = max(max_drift, float(np.max(np.abs(norms - 1))))
                points = points / norms[:, None]
                pushed = project_tangent(points, pushed)
                q, r = np.linalg.qr(pushed)
                logs = np.log(np.abs(np.diagonal(r, axis1=1, axis2=2)))
                worst = np.max(np.abs(logs))
                if not worst <= MAX_LOG_FACTOR:
                    raise NumericalBlowup(step, float(worst))
                frames = q
                if step < burn_in:
                    continue
                index = step - burn_in
                log_diagonal[index] = logs.mean(axis=0)
                log_volume[index] = log_gram_volume(pushed).mean()
                if full_det:
                    target_frames = tangent_frames(points)
                    square = target_frames.transpose(0, 2, 1) @ pushed
                    log_det[index] = np.linalg.slogdet(square)[1].mean()
        logger(message="Renormalization drift at most %.2e" % max_drift)
        return dict(
            log_diagonal=log_diagonal,
            log_volume=log_volume,
            log_det=log_det,
            max_drift=max_drift,
        )

    def lyapunov_spectrum(
        self,
        x0="haar",
        n_steps=10 ** 5,
        seed=0,
        n_walkers=1,
        burn_in=0,
        n_batches=20,
        logger=None,
    ):
        """Estimate the Lyapunov spectrum by QR re-orthonormalization.

        A full tangent frame is pushed forward and re-orthonormalized at
        every step; the exponents are the time averages of ln|R_ii|.

        Parameters
        ----------

        x0
          Starting point (array of shape (n,)), or "haar" for random starting
          points with random frames.

        n_steps
          Number of recorded steps, at least 1000.

        seed
          Seed of the map choices (and of the starting points for "haar").

        n_walkers
          Number of independent walkers averaged at each step.

        burn_in
          Steps run before recording.

        n_batches
          Number of batches for the batch-means standard errors.
        """
        if n_steps < 1000:
            raise ValueError("Lyapunov estimates need n_steps >= 1000, got %d" % n_steps)
        series = self._propagate(
            self.dim, x0, None, n_steps, seed, n_walkers, burn_in, logger, full_det=True
        )
        log_diagonal = series["log_diagonal"]
        exponents, errors = batch_means(log_diagonal, n_batches)
        log_det_mean, log_det_error = batch_means(series["log_det"], n_batches)
        checkpoints = np.unique(
            np.linspace(n_steps / N_CHECKPOINTS, n_steps, N_CHECKPOINTS).astype(int)
        )
        running = np.cumsum(log_diagonal, axis=0)[checkpoints - 1] / checkpoints[:, None]
        trace = pandas.DataFrame(
            running, columns=["lambda_%d" % (i + 1) for i in range(self.dim)]
        )
        trace.insert(0, "step", checkpoints)
        return LyapunovSpectrum(
            exponents,
            errors,
            n_steps=n_steps,
            n_walkers=n_walkers,
            seed=seed,
            log_det_mean=float(log_det_mean),
            log_det_error=float(log_det_error),
            trace=trace,
            max_drift=series["max_drift"],
            batch_averages=batch_averages(log_diagonal, n_batches),
        )

    def lambda_r_estimate(
        self,
        r,
        x0="haar",
        frame0=None,
        n_steps=10 ** 5,
        seed=0,
        n_walkers=1,
        burn_in=0,
        n_batches=20,
        logger=None,
    ):
        """Time average of ln det(Df | E) along the induced orbit of r-planes.

        With the same seed and starting point this follows the same
        realization as ``lyapunov_spectrum``.

        Returns (estimate, standard error).
        """
        if not 1 <= r <= self.dim:
            raise ValueError("Need 1 <= r <= %d, got %d" % (self.dim, r))
        series = self._propagate(r, x0, frame0, n_steps, seed, n_walkers, burn_in, logger)
        estimate, error = batch_means(series["log_volume"], n_batches)
        return float(estimate), float(error)

    def empirical_measure(
        self, x0="haar", n_steps=10 ** 4, burn_in=10 ** 4, seed=0, n_walkers=1, logger=None
    ):
        """Occupation measure of the orbits after ``burn_in`` steps."""
        logger = default_bar_logger(logger)
        rng = make_rng(seed)
        points, _ = self._initial_state(x0, 0, n_walkers, rng)
        history = np.empty((n_steps, n_walkers, self.ambient_dim))
        for chunk in logger.iter_bar(step=self._chunks(burn_in + n_steps)):
            for step in chunk:
                choices = rng.integers(self.m, size=n_walkers)
                points = normalize(self._step(points, None, choices)[0])
                if step >= burn_in:
                    history[step - burn_in] = points
        return EmpiricalMeasure(history, burn_in=burn_in, seed=seed)

    def haar_discrepancy(self, phi, measure, return_error=False):
        """|integral of phi over the orbit - integral over the volume|.

        Parameters
        ----------

        phi
          Scalar HarmonicCoeffs on S^2 (the volume integral is the degree-0
          coefficient), or a callable on points (then it is integrated
          against volume with the ``volume_integral`` attribute if present,
          else 0).

        measure
          EmpiricalMeasure from an orbit of this system.
        """
        if hasattr(phi, "evaluate"):
            function, volume_integral = phi.evaluate, phi.mean
        else:
            function, volume_integral = phi, getattr(phi, "volume_integral", 0.0)
        mean, error = measure.integrate(function)
        discrepancy = abs(mean - volume_integral)
        if return_error:
            return discrepancy, error
        return discrepancy

    def orbit(self, x0, n_steps, seed=0):
        """Single orbit from x0: array (n_steps + 1, n) starting with x0."""
        rng = make_rng(seed)
        points = normalize(np.asarray(x0, dtype=float))[None, :]
        orbit = [points[0]]
        for _ in range(n_steps):
            choices = rng.integers(self.m, size=1)
            points = normalize(self._step(points, None, choices)[0])
            orbit.append(points[0])
        return np.array(orbit)

    def __repr__(self):
        return "RandomDynamicalSystem(m=%d, dim=%d)" % (self.m, self.dim)
