from ..IsokamError import IsokamError


class TooFarFromIsometry(IsokamError):
    """Raised when a map moves points too far from the reference isometry."""

    def __init__(self, displacement, limit):
        self.displacement = displacement
        self.limit = limit
        super().__init__(
            "The map moves a point by %.4g from the isometry, the limit is %.4g"
            % (displacement, limit),
            suggestion="Start from a closer isometry guess or a smaller perturbation.",
            data=dict(displacement=displacement, limit=limit),
        )

