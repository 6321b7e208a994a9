from .HarmonicBlock import HarmonicBlock
from .HarmonicCoeffs import HarmonicCoeffs, design_matrix
from .GapProfile import GapProfile, gap_profile, fit_gap_bound
from .spherical_harmonics import (
    casimir,
    real_spherical_harmonics,
    sphere_panel,
    fibonacci_panel,
    haar_sphere_points,
    fitting_panel,
)
from .rotations import (
    wigner_block,
    averaging_block,
    koopman_block,
    vector_averaging_operator,
    radial_coefficients,
    apply_averaging,
    rotate_coefficients,
)
from .coboundary import (
    diophantine_margin,
    solve_coboundary,
    smooth_truncate,
    tameness_profile,
)
from .errors import NotDiophantineAtDegree, PanelIllConditioned
