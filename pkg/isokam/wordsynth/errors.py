from ..IsokamError import IsokamError


class NotDenseAtBudget(IsokamError):
    """Raised when a BFS net does not reach the target density."""

    def __init__(self, radius, epsilon, length):
        self.radius = radius
        self.epsilon = epsilon
        self.length = length
        super().__init__(
            "Words of length <= %d only cover the test panel within %.6g "
            "(target %.6g)" % (length, radius, epsilon),
            suggestion="Increase max_len or check that the generators are dense.",
            data=dict(radius=radius, epsilon=epsilon, length=length),
        )


class BudgetExceeded(IsokamError):
    """Raised when no power h^n, n <= n_max approximates h^-1."""

    def __init__(self, n_max, best, epsilon):
        self.n_max = n_max
        self.best = best
        self.epsilon = epsilon
        super().__init__(
            "No power n <= %d gets within %.3g of the inverse (best %.3g)"
            % (n_max, epsilon, best),
            data=dict(n_max=n_max, best=best, epsilon=epsilon),
        )


class NetTooCoarse(IsokamError):
    """Raised when the nearest net word is outside the recursion basin."""

    def __init__(self, distance, basin_radius):
        self.distance = distance
        self.basin_radius = basin_radius
        super().__init__(
            "Nearest net word is at distance %.4g, beyond the basin radius %.4g"
            % (distance, basin_radius),
            suggestion="Build the net with a smaller epsilon.",
            data=dict(distance=distance, basin_radius=basin_radius),
        )


class DimUnsupported(IsokamError):
    """Raised when Solovay-Kitaev is asked for a group other than SO(3)."""

    def __init__(self, dim):
        self.dim = dim
        super().__init__(
            "Solovay-Kitaev is implemented for SO(3) only, got SO(%d)" % dim,
            suggestion="Use epsilon_net_bfs() nets directly in higher dimension.",
            data=dict(dim=dim),
        )
