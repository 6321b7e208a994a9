from .GroupElement import GroupElement
from .GeneratorTuple import GeneratorTuple, GOLDEN_ANGLE
from .lie_operations import (
    project_to_group,
    distance,
    distance_with_fallback,
    so_diameter,
    batch_distance,
    exp_so,
    log_so,
    haar_sample,
    haar_samples,
    random_skew,
    hat,
    vee,
)
from .matrix_io import read_matrices, write_matrices
from .errors import NotInGroup, SingularInput, LogUndefined, DimensionMismatch
