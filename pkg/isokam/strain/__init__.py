from .StrainSample import StrainSample, split_strain
from .strain_tensors import (
    pullback_metric,
    strain_at,
    strain_norms,
    lambda_r_strain_expansion,
)
