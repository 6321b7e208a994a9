from ..IsokamError import IsokamError


class RankDeficient(IsokamError):
    """Raised when a Gram determinant underflows (the image has lower rank)."""

    def __init__(self, gram_determinant, threshold=1e-300):
        self.gram_determinant = gram_determinant
        super().__init__(
            "The Gram determinant %.3e is below %.0e, the subspace image is "
            "rank deficient" % (gram_determinant, threshold),
            data=dict(gram_determinant=gram_determinant, threshold=threshold),
        )
