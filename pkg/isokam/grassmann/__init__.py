from .SubspaceFrame import SubspaceFrame
from .determinants import (
    subspace_det,
    log_subspace_det,
    log_gram_volume,
    haar_frames,
    haar_grassmannian,
)
from .taylor import (
    lambda_r_taylor,
    lambda_r_taylor_terms,
    lambda_per_exponent_taylor,
    metric_taylor,
    strain_expansion_coefficients,
)
from .monte_carlo import lambda_r_mc, metric_lambda_mc, sphere_moments
from .induced import (
    push_frames,
    induced_map,
    chart_induced_map,
    chart_frame,
    principal_angles,
    orthonormalize,
)
from .errors import RankDeficient
