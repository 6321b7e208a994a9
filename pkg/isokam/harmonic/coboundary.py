"""Diophantine margins, tame coboundary solves and smoothing cutoffs."""

import numpy as np
import pandas
from scipy.linalg import null_space
from proglog import default_bar_logger

from ..tools import parallel_map
from .errors import NotDiophantineAtDegree
from .HarmonicCoeffs import HarmonicCoeffs
from .spherical_harmonics import casimir
from .rotations import (
    wigner_block,
    koopman_block,
    vector_averaging_operator,
    radial_coefficients,
)

SINGULAR_TOLERANCE = 1e-12


def diophantine_margin(S, degree):
    """Smallest singular value of the stacked matrix [I - B_1; ...; I - B_m].

    It bounds min over unit v of max_i |v - B_i v| from below, and from above
    up to the factor sqrt(m).
    """
    if degree < 1:
        raise ValueError("The margin is defined for degrees >= 1, got %d" % degree)
    identity = np.eye(2 * degree + 1)
    stacked = np.vstack([identity - wigner_block(g, degree) for g in S])
    return float(np.linalg.svd(stacked, compute_uv=False)[-1])


def _solve_block(operator, rhs, degree, tolerance, kernel=None):
    """Solve operator @ x = rhs, on the complement of ``kernel`` if given.

    Returns (solution, residual).
    """
    if kernel is not None:
        basis = null_space(kernel.reshape((1, -1)))
        reduced_operator = basis.T @ operator @ basis
        reduced_rhs = basis.T @ rhs
    else:
        reduced_operator, reduced_rhs = operator, rhs
    smallest = np.linalg.svd(reduced_operator, compute_uv=False)[-1]
    if smallest <= tolerance:
        raise NotDiophantineAtDegree(degree, float(smallest), tolerance)
    solution = np.linalg.solve(reduced_operator, reduced_rhs)
    residual = np.linalg.norm(reduced_operator @ solution - reduced_rhs)
    if kernel is not None:
        solution = basis @ solution
    return solution, float(residual)


def solve_coboundary(S, phi, tolerance=SINGULAR_TOLERANCE, threads=None, logger=None):
    """Solve (I - M) psi = phi - mean(phi) degree by degree.

    For scalar coefficients M is the Koopman average and psi has no mean.
    For vector-channel coefficients M is the push-forward average, every
    degree including 0 is solved, and the radial direction of degree 1 (the
    field x -> x, fixed by every rotation) is left out.

    The largest per-block residual is stored in ``psi.fit_residual``.

    Parameters
    ----------

    S
      GeneratorTuple of rotations of R^3.

    phi
      HarmonicCoeffs to invert against.

    tolerance
      A block whose smallest singular value is at most this raises
      NotDiophantineAtDegree.
    """
    logger = default_bar_logger(logger)
    vector = phi.channel == "vector"

    def solve_degree(degree):
        block = phi.block(degree)
        if not vector:
            if degree == 0:
                return np.zeros(1), 0.0
            operator = np.eye(2 * degree + 1) - koopman_block(S, degree)
            return _solve_block(operator, block, degree, tolerance)
        size = 3 * (2 * degree + 1)
        operator = np.eye(size) - vector_averaging_operator(S, degree)
        kernel = radial_coefficients().ravel() if degree == 1 else None
        solution, residual = _solve_block(
            operator, block.ravel(), degree, tolerance, kernel=kernel
        )
        return solution.reshape(block.shape), residual

    logger(message="Solving the coboundary equation up to degree %d" % phi.l_max)
    results = parallel_map(solve_degree, phi.degrees, threads)
    psi = HarmonicCoeffs([solution for solution, _ in results], phi.channel)
    psi.fit_residual = max(residual for _, residual in results)
    return psi


def smooth_truncate(X, cutoff):
    """Split X into (T X, R X): degrees with c_l < cutoff, and the rest."""
    if cutoff < 0:
        raise ValueError("The cutoff must be >= 0, got %s" % cutoff)
    low = X.restricted(lambda degree: casimir(degree) < cutoff)
    high = X.restricted(lambda degree: casimir(degree) >= cutoff)
    return low, high


def tameness_profile(S, l_max, threads=None):
    """Norms of (I - M_l)^-1 and their ratio to log^4 c_l, as a dataframe.

    Columns: l, casimir, inverse_norm, ratio_log4.
    """

    def degree_record(degree):
        operator = np.eye(2 * degree + 1) - koopman_block(S, degree)
        smallest = np.linalg.svd(operator, compute_uv=False)[-1]
        inverse_norm = np.inf if smallest == 0 else 1.0 / smallest
        return dict(
            l=degree,
            casimir=casimir(degree),
            inverse_norm=inverse_norm,
            ratio_log4=inverse_norm / np.log(casimir(degree)) ** 4,
        )

    records = parallel_map(degree_record, range(1, l_max + 1), threads)
    return pandas.DataFrame(records, columns=["l", "casimir", "inverse_norm", "ratio_log4"])
