import numpy as np

from .errors import BudgetExceeded

SCAN_CHUNK = 100000


def power_distances(h, powers):
    """distance(h^-1, h^n) for an array of powers n.

    distance(h^-1, h^n) = |log(h^(n+1))|_F, and the eigenvalue phases of
    h^(n+1) are (n+1) times those of h (wrapped to (-pi, pi]), so no matrix
    power is ever formed.
    """
    mat = getattr(h, "mat", h)
    phases = np.angle(np.linalg.eigvals(mat))
    angles = (np.asarray(powers, dtype=float)[:, None] + 1) * phases[None, :]
    wrapped = np.mod(angles + np.pi, 2 * np.pi) - np.pi
    return np.sqrt(np.sum(wrapped ** 2, axis=1))


def approximate_inverse(h, epsilon, n_max, chunk_size=SCAN_CHUNK):
    """Smallest n <= n_max with distance(h^-1, h^n) < epsilon.

    The powers are scanned in increasing order (in vectorized chunks), so the
    returned n is minimal.

    Returns
    -------

    (n, achieved) where achieved is the distance reached by h^n.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    best = np.inf
    for start in range(1, int(n_max) + 1, chunk_size):
        powers = np.arange(start, min(start + chunk_size, int(n_max) + 1))
        distances = power_distances(h, powers)
        hits = np.flatnonzero(distances < epsilon)
        if len(hits):
            return int(powers[hits[0]]), float(distances[hits[0]])
        best = min(best, float(distances.min()))
    raise BudgetExceeded(n_max, best, epsilon)
