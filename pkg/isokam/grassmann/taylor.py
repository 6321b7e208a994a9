"""Closed-form second-order expansions of Lambda_r on Grassmannians."""

import numpy as np


def _trace_free_symmetric_part(L):
    d = len(L)
    return (L + L.T) / 2 - (np.trace(L) / d) * np.eye(d)


def _non_conformal_coefficient(d, r):
    """r(d - r) / ((d + 2)(d - 1)), zero in dimension 1."""
    if d == 1:
        return 0.0
    return r * (d - r) / ((d + 2.0) * (d - 1.0))


def lambda_r_taylor_terms(L, r):
    """First and second order terms (alpha_1, alpha_2) of Lambda_r(L).

    Lambda_r(L) is the Haar average over r-planes E of ln det(I + L | E).
    With d = dim L and K the trace-free symmetric part of L,
    alpha_1 = (r/d) Tr L and
    alpha_2 = -(r/2d) Tr(L^2) + r(d-r)/((d+2)(d-1)) Tr(K^2).
    """
    L = np.asarray(L, dtype=float)
    d = len(L)
    if not 1 <= r <= d:
        raise ValueError("Need 1 <= r <= d, got r=%d, d=%d" % (r, d))
    K = _trace_free_symmetric_part(L)
    alpha_1 = r / d * np.trace(L)
    alpha_2 = -r / (2.0 * d) * np.trace(L @ L) + _non_conformal_coefficient(
        d, r
    ) * np.trace(K @ K)
    return float(alpha_1), float(alpha_2)


def lambda_r_taylor(L, r):
    """Second-order Taylor approximation alpha_1 + alpha_2 of Lambda_r(L)."""
    return sum(lambda_r_taylor_terms(L, r))


def lambda_per_exponent_taylor(L, r):
    """Second-order approximation of the r-th exponent Lambda_r - Lambda_{r-1}.

    Tr(L)/d - Tr(L^2)/(2d) + (d - 2r + 1)/((d + 2)(d - 1)) Tr(K^2).
    """
    L = np.asarray(L, dtype=float)
    d = len(L)
    if not 1 <= r <= d:
        raise ValueError("Need 1 <= r <= d, got r=%d, d=%d" % (r, d))
    K = _trace_free_symmetric_part(L)
    coefficient = 0.0 if d == 1 else (d - 2 * r + 1) / ((d + 2.0) * (d - 1.0))
    return float(
        np.trace(L) / d - np.trace(L @ L) / (2.0 * d) + coefficient * np.trace(K @ K)
    )


def metric_taylor(G, r):
    """First-order value (r/2d) Tr G of the average of ln det(I, I, I+G | E)."""
    G = np.asarray(G, dtype=float)
    return float(r / (2.0 * len(G)) * np.trace(G))


def strain_expansion_coefficients(d, r):
    """Coefficients (conformal, non_conformal) of the strain expansion.

    For a map with pullback metric I + 2E in orthonormal frames, the
    second-order average of the r-plane log-determinants is
    conformal * (Tr E)^2 + non_conformal * |E_NC|^2.
    """
    return -r / (2.0 * d), _non_conformal_coefficient(d, r)
