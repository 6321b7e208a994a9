import numpy as np
import pandas
from proglog import default_bar_logger

from ..tools import parallel_map
from .spherical_harmonics import casimir
from .rotations import averaging_block

MAX_ALPHA = 4.0


def fit_gap_bound(degrees, casimirs, gaps):
    """Fit (D2, alpha) so that gap_l >= 1 / (D2 log^alpha c_l) for l >= 2.

    alpha is the least-squares slope of log(1/gap) against log log c,
    clipped to [0, 4]; D2 is then the smallest constant leaving no
    violation. Returns (inf, nan) when some gap is not positive.
    """
    degrees, casimirs, gaps = (np.asarray(a, dtype=float) for a in (degrees, casimirs, gaps))
    mask = degrees >= 2
    if not mask.any() or np.any(gaps[mask] <= 0):
        return np.inf, np.nan
    log_logs = np.log(np.log(casimirs[mask]))
    log_inverse_gaps = -np.log(gaps[mask])
    if mask.sum() >= 2:
        alpha = np.polyfit(log_logs, log_inverse_gaps, 1)[0]
    else:
        alpha = 0.0
    alpha = float(np.clip(alpha, 0, MAX_ALPHA))
    D2 = float(np.max(1.0 / (gaps[mask] * np.log(casimirs[mask]) ** alpha)))
    # Rounding margin so the fitted bound holds at the extremal degree.
    return D2 * (1 + 1e-12), alpha


class GapProfile:
    """Per-degree spectral norms of the averaging operator and a polylog fit.

    Parameters
    ----------

    records
      List of dicts with keys ``l, casimir, norm, norm_power, gap,
      gap_one_step``. ``norm`` is the operator norm of M_l, ``norm_power``
      that of M_l^n. ``gap_one_step`` is 1 - norm and ``gap`` the effective
      per-step gap 1 - norm_power^(1/n), which stays positive for a
      Diophantine pair even though |(A+B)/2| can equal 1.

    n_powers
      The power n used in ``norm_power``.
    """

    def __init__(self, records, n_powers):
        self.records = records
        self.n_powers = n_powers
        self.D2, self.alpha = fit_gap_bound(self.degrees, self.casimirs, self.gaps)

    @property
    def degrees(self):
        return np.array([r["l"] for r in self.records])

    @property
    def casimirs(self):
        return np.array([r["casimir"] for r in self.records])

    @property
    def gaps(self):
        return np.array([r["gap"] for r in self.records])

    def bound(self, degree):
        """The fitted lower bound 1 / (D2 log^alpha c_l)."""
        if not np.isfinite(self.D2):
            return 0.0
        return 1.0 / (self.D2 * np.log(casimir(degree)) ** self.alpha)

    def violations(self):
        """Degrees l >= 2 where the gap is below the fitted bound."""
        return [
            r["l"]
            for r in self.records
            if r["l"] >= 2 and r["gap"] < self.bound(r["l"])
        ]

    def to_dataframe(self):
        dataframe = pandas.DataFrame(self.records)
        dataframe["bound_fit"] = [
            self.bound(l) if l >= 2 else np.nan for l in dataframe["l"]
        ]
        return dataframe[
            ["l", "casimir", "norm", "norm_power", "gap", "gap_one_step", "bound_fit"]
        ]

    def to_dict(self):
        return {
            "n_powers": self.n_powers,
            "D2": self.D2,
            "alpha": self.alpha,
            "min_gap": float(np.min(self.gaps)),
            "violations": self.violations(),
        }


def gap_profile(S, l_max, n_powers=16, threads=None, logger=None):
    """Spectral norms of M_l and M_l^n for l = 1..l_max, with the gap fit.

    Parameters
    ----------

    S
      GeneratorTuple of rotations of R^3.

    l_max
      Largest degree, at least 1.

    n_powers
      The power n in |M_l^n|.

    threads
      Number of worker threads, the degrees being independent.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1, got %d" % l_max)
    logger = default_bar_logger(logger)

    def degree_record(degree):
        block = averaging_block(S, degree)
        norm = np.linalg.norm(block, 2)
        norm_power = np.linalg.norm(np.linalg.matrix_power(block, n_powers), 2)
        return dict(
            l=degree,
            casimir=casimir(degree),
            norm=norm,
            norm_power=norm_power,
            gap=1 - norm_power ** (1.0 / n_powers),
            gap_one_step=1 - norm,
        )

    logger(message="Computing spectral norms up to degree %d" % l_max)
    records = parallel_map(degree_record, range(1, l_max + 1), threads)
    profile = GapProfile(records, n_powers)
    logger(message="Gap fit: D2=%.4g, alpha=%.4g" % (profile.D2, profile.alpha))
    return profile
