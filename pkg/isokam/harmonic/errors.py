from ..IsokamError import IsokamError


class NotDiophantineAtDegree(IsokamError):
    """Raised when I - M is singular on a harmonic degree.

    This means the generator tuple has a common invariant vector in that
    degree, so the coboundary equation cannot be solved there.
    """

    def __init__(self, degree, margin, tolerance=1e-12):
        self.degree = degree
        self.margin = margin
        self.tolerance = tolerance
        super().__init__(
            "The tuple is not Diophantine at degree %d (smallest singular value "
            "of I - M is %.3e <= %.1e)" % (degree, margin, tolerance),
            suggestion="Check that the rotations generate a dense subgroup.",
            data=dict(degree=degree, margin=margin, tolerance=tolerance),
        )


class PanelIllConditioned(IsokamError):
    """Raised when the fitting panel of a harmonic degree is ill-conditioned."""

    def __init__(self, degree, condition):
        self.degree = degree
        self.condition = condition
        super().__init__(
            "The point panel of degree %d has condition number %.3e" % (degree, condition),
            data=dict(degree=degree, condition=condition),
        )
