"""Monte-Carlo integrals over Haar r-planes and uniform sphere points."""

import numpy as np
from proglog import default_bar_logger

from ..tools import sharded_samples, mean_and_standard_error
from .determinants import haar_frames, log_gram_volume


def _check_square(L):
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError("Expected a square matrix, got shape %s" % (L.shape,))
    return L


def lambda_r_mc(
    L, r, n_samples=10 ** 6, seed=0, control_variate=True, threads=None, logger=None
):
    """Monte-Carlo estimate of Lambda_r(L) = avg over E of ln det(I + L | E).

    With ``control_variate`` the first-order term tr(E^T L E), whose exact
    average is (r/n) Tr L, is subtracted from each sample and its average
    added back; the estimator stays unbiased and loses the O(|L|) noise.

    Returns (estimate, standard error).
    """
    L = _check_square(L)
    n = len(L)
    logger = default_bar_logger(logger)
    mapping = np.eye(n) + L
    exact_first_order = r / n * np.trace(L)

    def sampler(size, rng):
        frames = haar_frames(n, r, size, rng)
        values = log_gram_volume(mapping @ frames)
        if control_variate:
            first_order = np.einsum("sni,nm,smi->s", frames, L, frames)
            values = values - first_order + exact_first_order
        return values

    values = sharded_samples(sampler, n_samples, seed, threads, logger)
    mean, error = mean_and_standard_error(values)
    return float(mean), float(error)


def metric_lambda_mc(G, r, n_samples=10 ** 6, seed=0, threads=None, logger=None):
    """Monte-Carlo average of ln det(I, I, I + G | E) over Haar r-planes.

    Returns (estimate, standard error).
    """
    G = _check_square(G)
    n = len(G)
    metric = np.eye(n) + G

    def sampler(size, rng):
        return log_gram_volume(haar_frames(n, r, size, rng), metric)

    values = sharded_samples(sampler, n_samples, seed, threads, default_bar_logger(logger))
    mean, error = mean_and_standard_error(values)
    return float(mean), float(error)


def sphere_moments(d, n_samples=10 ** 6, seed=0, threads=None, logger=None):
    """Moments of a uniform point of S^(d-1) in R^d with their errors.

    Returns a dict with the estimates ``m2`` (x_1^2), ``m4`` (x_1^4) and
    ``m22`` (x_1^2 x_2^2), their standard errors ``m2_se``, ``m4_se``,
    ``m22_se``, and the exact values ``m2_exact`` = 1/d, ``m4_exact`` =
    3/(d(d+2)), ``m22_exact`` = 1/(d(d+2)).
    """
    if d < 2:
        raise ValueError("Sphere moments need d >= 2, got %d" % d)

    def sampler(size, rng):
        gaussian = rng.standard_normal((size, d))
        points = gaussian / np.linalg.norm(gaussian, axis=1, keepdims=True)
        squares = points[:, :2] ** 2
        return np.stack(
            [squares[:, 0], squares[:, 0] ** 2, squares[:, 0] * squares[:, 1]], axis=1
        )

    values = sharded_samples(sampler, n_samples, seed, threads, default_bar_logger(logger))
    means, errors = mean_and_standard_error(values)
    result = {}
    exact = [1.0 / d, 3.0 / (d * (d + 2)), 1.0 / (d * (d + 2))]
    for name, mean, error, value in zip(["m2", "m4", "m22"], means, errors, exact):
        result[name] = float(mean)
        result[name + "_se"] = float(error)
        result[name + "_exact"] = value
    return result
