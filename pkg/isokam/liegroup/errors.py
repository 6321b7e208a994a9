from ..IsokamError import IsokamError


class NotInGroup(IsokamError):
    """Raised when a matrix is not special orthogonal within tolerance."""

    def __init__(self, orthogonality_defect, determinant):
        self.orthogonality_defect = orthogonality_defect
        self.determinant = determinant
        message = (
            "Matrix is not in SO(n): |M^T M - I| = %.3e, det = %.12g"
            % (orthogonality_defect, determinant)
        )
        super().__init__(
            message,
            suggestion="Use project_to_group() to get the nearest rotation.",
            data=dict(orthogonality_defect=orthogonality_defect, determinant=determinant),
        )


class SingularInput(IsokamError):
    """Raised when a matrix to project onto SO(n) is (nearly) singular."""

    def __init__(self, smallest_singular_value):
        self.smallest_singular_value = smallest_singular_value
        super().__init__(
            "Cannot project a singular matrix onto SO(n) (smallest singular "
            "value %.3e)" % smallest_singular_value,
            data=dict(smallest_singular_value=smallest_singular_value),
        )


class LogUndefined(IsokamError):
    """Raised when the principal logarithm of a rotation is not defined.

    This happens when the rotation has an eigenvalue -1 (half-turn).
    """

    def __init__(self, eigenvalue_gap):
        self.eigenvalue_gap = eigenvalue_gap
        super().__init__(
            "Principal logarithm undefined: eigenvalue within %.3e of -1"
            % eigenvalue_gap,
            suggestion="Use distance_with_fallback() to get a chordal distance.",
            data=dict(eigenvalue_gap=eigenvalue_gap),
        )


class DimensionMismatch(IsokamError):
    """Raised when group elements of different dimensions are combined."""

    def __init__(self, dims):
        self.dims = tuple(dims)
        super().__init__(
            "Group elements have different dimensions: %s" % (self.dims,),
            data=dict(dims=list(self.dims)),
        )
