"""Pullback metrics, strain tensors and their integrals over the sphere."""

import numpy as np
from proglog import default_bar_logger

from ..tools import sharded_samples, mean_and_standard_error
from ..grassmann import strain_expansion_coefficients
from .StrainSample import StrainSample, split_strain


def pullback_metric(f, x):
    """Matrix J^T J of f*g at x in orthonormal frames.

    ``x`` is a point (n,) giving a (d, d) matrix, or points (P, n) giving
    a stack (P, d, d).
    """
    x = np.asarray(x, dtype=float)
    jacobian = f.jacobian(np.atleast_2d(x))
    pullback = jacobian.transpose(0, 2, 1) @ jacobian
    return pullback[0] if x.ndim == 1 else pullback


def strain_at(f, x):
    """StrainSample of f at the point x."""
    return StrainSample(x, pullback_metric(f, x))


def _uniform_points(size, dim, rng):
    gaussian = rng.standard_normal((size, dim + 1))
    return gaussian / np.linalg.norm(gaussian, axis=1, keepdims=True)


def _strain_integrands(f, points):
    """Columns |f*g - g|^2, |E_C|^2, |E_NC|^2, (Tr E)^2 at the points."""
    E, E_C, E_NC = split_strain(pullback_metric(f, points))
    trace = np.trace(E, axis1=1, axis2=2)
    return np.stack(
        [
            4 * np.sum(E ** 2, axis=(1, 2)),
            np.sum(E_C ** 2, axis=(1, 2)),
            np.sum(E_NC ** 2, axis=(1, 2)),
            trace ** 2,
        ],
        axis=1,
    )


def strain_norms(f, n_quad=10 ** 4, seed=0, threads=None, logger=None):
    """Monte-Carlo integrals of strain norms over uniform points of S^d.

    Volume is normalized to 1. Returns a dict with ``H0_sq`` (integral of
    |f*g - g|^2), ``sup`` (largest |f*g - g| on the sample), ``H0_E_C_sq``,
    ``H0_E_NC_sq`` and ``H0_trace_sq`` (integral of (Tr E)^2), each integral
    with its standard error under the key suffixed by ``_se``.
    """
    if n_quad < 1000:
        raise ValueError("Strain quadratures need n_quad >= 1000, got %d" % n_quad)

    def sampler(size, rng):
        return _strain_integrands(f, _uniform_points(size, f.dim, rng))

    values = sharded_samples(sampler, n_quad, seed, threads, default_bar_logger(logger))
    means, errors = mean_and_standard_error(values)
    result = dict(sup=float(np.sqrt(np.max(values[:, 0]))))
    names = ["H0_sq", "H0_E_C_sq", "H0_E_NC_sq", "H0_trace_sq"]
    for name, mean, error in zip(names, means, errors):
        result[name] = float(mean)
        result[name + "_se"] = float(error)
    return result


def lambda_r_strain_expansion(maps, r, n_quad=10 ** 5, seed=0, threads=None, logger=None):
    """Second-order prediction of Lambda_r and lambda_r from the strains.

    Lambda_r ~ (1/m) sum_i [-(r/2d) int (Tr E_i)^2
    + r(d-r)/((d+2)(d-1)) int |E_NC,i|^2], and the r-th exponent alone has
    the coefficients -1/(2d) and (d-2r+1)/((d+2)(d-1)). This holds for
    tuples without mean field, where the first-order terms vanish.

    Parameters
    ----------

    maps
      List of sphere maps (or a RandomDynamicalSystem).

    r
      Rank, 1 <= r <= d.

    Returns a dict with ``Lambda_r``, ``Lambda_r_se``, ``lambda_r``,
    ``lambda_r_se`` and the averaged integrals ``trace_sq`` and
    ``non_conformal_sq``.
    """
    maps = list(getattr(maps, "maps", maps))
    d = maps[0].dim
    if not 1 <= r <= d:
        raise ValueError("Need 1 <= r <= %d, got %d" % (d, r))
    conformal, non_conformal = strain_expansion_coefficients(d, r)
    per_exponent_non_conformal = 0.0 if d == 1 else (d - 2 * r + 1) / ((d + 2.0) * (d - 1.0))

    def sampler(size, rng):
        points = _uniform_points(size, d, rng)
        integrands = np.mean([_strain_integrands(f, points) for f in maps], axis=0)
        trace_sq, non_conformal_sq = integrands[:, 3], integrands[:, 2]
        return np.stack(
            [
                conformal * trace_sq + non_conformal * non_conformal_sq,
                -trace_sq / (2.0 * d) + per_exponent_non_conformal * non_conformal_sq,
                trace_sq,
                non_conformal_sq,
            ],
            axis=1,
        )

    values = sharded_samples(sampler, n_quad, seed, threads, default_bar_logger(logger))
    means, errors = mean_and_standard_error(values)
    return dict(
        Lambda_r=float(means[0]),
        Lambda_r_se=float(errors[0]),
        lambda_r=float(means[1]),
        lambda_r_se=float(errors[1]),
        trace_sq=float(means[2]),
        non_conformal_sq=float(means[3]),
    )
