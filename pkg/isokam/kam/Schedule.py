import numpy as np


class Schedule:
    """Cutoffs lambda_n = N^(alpha (1 + tau)^n) of an iterated KAM run.

    Parameters
    ----------

    N
      Base, larger than 1 so that the cutoffs increase.

    alpha
      Positive exponent.

    tau
      Growth rate, 0 < tau < 1/8.

    n_steps
      Number of KAM steps.
    """

    def __init__(self, N, alpha, tau, n_steps):
        if not N > 1:
            raise ValueError("The schedule base N must be > 1, got %s" % N)
        if not alpha > 0:
            raise ValueError("alpha must be > 0, got %s" % alpha)
        if not 0 < tau < 1.0 / 8:
            raise ValueError("tau must be in (0, 1/8), got %s" % tau)
        if int(n_steps) < 1:
            raise ValueError("A schedule needs at least one step, got %s" % n_steps)
        self.N = float(N)
        self.alpha = float(alpha)
        self.tau = float(tau)
        self.n_steps = int(n_steps)

    @classmethod
    def from_string(cls, text):
        """Parse "N,ALPHA,TAU,STEPS"."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("Expected N,ALPHA,TAU,STEPS, got %s" % text)
        return cls(float(parts[0]), float(parts[1]), float(parts[2]), int(parts[3]))

    def cutoff(self, n):
        return self.N ** (self.alpha * (1 + self.tau) ** n)

    @property
    def cutoffs(self):
        return np.array([self.cutoff(n) for n in range(self.n_steps)])

    def to_dict(self):
        return dict(N=self.N, alpha=self.alpha, tau=self.tau, n_steps=self.n_steps)

    def __repr__(self):
        return "Schedule(N=%g, alpha=%g, tau=%g, n_steps=%d)" % (
            self.N,
            self.alpha,
            self.tau,
            self.n_steps,
        )
