from ..IsokamError import IsokamError


class AntipodalPoints(IsokamError):
    """Raised when a sphere logarithm is asked between (nearly) antipodal points."""

    def __init__(self, separation, tolerance=1e-9):
        self.separation = separation
        super().__init__(
            "The points are antipodal within %.1e (|x + y| = %.3e), the "
            "geodesic between them is not unique" % (tolerance, separation),
            data=dict(separation=separation, tolerance=tolerance),
        )


class NumericalBlowup(IsokamError):
    """Raised when a frame grows or shrinks by more than e^50 in one step."""

    def __init__(self, step, log_factor):
        self.step = step
        self.log_factor = log_factor
        super().__init__(
            "A growth factor of exp(%.3g) appeared at step %d" % (log_factor, step),
            suggestion="The maps are probably far from isometric, check the fields.",
            data=dict(step=step, log_factor=log_factor),
        )


class InversionNotConverged(IsokamError):
    """Raised when the fixed-point inversion of psi_V does not converge."""

    def __init__(self, residual, iterations):
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            "The inversion of the geodesic flow map stopped at residual %.3e "
            "after %d iterations" % (residual, iterations),
            suggestion="The conjugacy field is probably not C1-small.",
            data=dict(residual=residual, iterations=iterations),
        )
