import numpy as np
import pandas


class LyapunovSpectrum:
    """Estimated Lyapunov exponents of a random dynamical system.

    Parameters
    ----------

    exponents
      Per-step exponents, sorted in decreasing order.

    standard_errors
      Batch-means standard errors, in the same order.

    n_steps
      Number of recorded steps (after burn-in) per walker.

    n_walkers
      Number of independent walkers averaged at each step.

    log_det_mean, log_det_error
      Orbit average of ln|det Df| on the full tangent space, accumulated
      independently of the orthonormalization, and its standard error.

    trace
      Dataframe of running exponents at checkpoints (columns step,
      lambda_1, ..., lambda_d).

    max_drift
      Largest deviation of |x| from 1 before renormalization.

    batch_averages
      Array (n_batches, d) of the exponents averaged over each batch, used
      for the errors of linear combinations of exponents.
    """

    def __init__(
        self,
        exponents,
        standard_errors,
        n_steps,
        n_walkers=1,
        seed=None,
        log_det_mean=None,
        log_det_error=None,
        trace=None,
        max_drift=0.0,
        batch_averages=None,
    ):
        exponents = np.asarray(exponents, dtype=float)
        standard_errors = np.asarray(standard_errors, dtype=float)
        order = np.argsort(-exponents, kind="stable")
        self.exponents = exponents[order]
        self.standard_errors = standard_errors[order]
        self.batch_averages = (
            None if batch_averages is None else np.asarray(batch_averages)[:, order]
        )
        self.n_steps = n_steps
        self.n_walkers = n_walkers
        self.seed = seed
        self.log_det_mean = log_det_mean
        self.log_det_error = log_det_error
        self.trace = trace
        self.max_drift = max_drift

    @property
    def dim(self):
        return len(self.exponents)

    @property
    def partial_sums(self):
        """Lambda_r = lambda_1 + ... + lambda_r for r = 1..d."""
        return np.cumsum(self.exponents)

    @property
    def top(self):
        return self.exponents[0]

    @property
    def bottom(self):
        return self.exponents[-1]

    def combination(self, weights):
        """Return (value, standard error) of sum_i weights[i] * lambda_i."""
        weights = np.asarray(weights, dtype=float)
        value = float(weights @ self.exponents)
        if self.batch_averages is None:
            return value, float(np.sqrt(np.sum((weights * self.standard_errors) ** 2)))
        combined = self.batch_averages @ weights
        return value, float(combined.std(ddof=1) / np.sqrt(len(combined)))

    def to_dict(self):
        return {
            "exponents": self.exponents,
            "standard_errors": self.standard_errors,
            "partial_sums": self.partial_sums,
            "n_steps": self.n_steps,
            "n_walkers": self.n_walkers,
            "seed": self.seed,
            "log_det_mean": self.log_det_mean,
            "log_det_error": self.log_det_error,
            "max_drift": self.max_drift,
        }

    def trace_dataframe(self):
        if self.trace is None:
            return pandas.DataFrame()
        return self.trace

    def __repr__(self):
        return "LyapunovSpectrum(%s)" % ", ".join(
            "%.3e ± %.1e" % (e, s) for e, s in zip(self.exponents, self.standard_errors)
        )


def compare_runs(spectra, n_sigma=3.0):
    """Check that independent runs agree within n_sigma combined errors.

    Different seeds or starting points may follow different stationary
    measures; this reports every pair of runs and exponent index where the
    estimates disagree.

    Returns a dict with keys ``consistent``, ``max_z`` and
    ``disagreements`` (list of (run_a, run_b, index, z) tuples).
    """
    disagreements = []
    max_z = 0.0
    for a in range(len(spectra)):
        for b in range(a + 1, len(spectra)):
            first, second = spectra[a], spectra[b]
            errors = np.sqrt(first.standard_errors ** 2 + second.standard_errors ** 2)
            differences = np.abs(first.exponents - second.exponents)
            z = differences / np.maximum(errors, 1e-300)
            z[differences == 0] = 0
            max_z = max(max_z, float(np.max(z)))
            for index in np.flatnonzero(z > n_sigma):
                disagreements.append((a, b, int(index), float(z[index])))
    return dict(
        consistent=len(disagreements) == 0,
        max_z=max_z,
        disagreements=disagreements,
    )
