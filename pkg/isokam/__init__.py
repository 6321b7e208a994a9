""" isokam/__init__.py """

# __all__ = []

from .IsokamError import IsokamError
from .liegroup import (
    GroupElement,
    GeneratorTuple,
    GOLDEN_ANGLE,
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
    read_matrices,
    write_matrices,
    NotInGroup,
    SingularInput,
    LogUndefined,
    DimensionMismatch,
)
from .wordsynth import (
    Word,
    EpsilonNet,
    epsilon_net_bfs,
    certification_panel,
    approximate_inverse,
    power_distances,
    solovay_kitaev,
    group_commutator_decomposition,
    fit_contraction_constant,
    compile_without_inverses,
    CompiledWord,
    NotDenseAtBudget,
    BudgetExceeded,
    NetTooCoarse,
    DimUnsupported,
)
from .harmonic import (
    HarmonicBlock,
    HarmonicCoeffs,
    design_matrix,
    GapProfile,
    gap_profile,
    fit_gap_bound,
    casimir,
    real_spherical_harmonics,
    sphere_panel,
    fibonacci_panel,
    haar_sphere_points,
    wigner_block,
    averaging_block,
    koopman_block,
    vector_averaging_operator,
    radial_coefficients,
    apply_averaging,
    rotate_coefficients,
    diophantine_margin,
    solve_coboundary,
    smooth_truncate,
    tameness_profile,
    NotDiophantineAtDegree,
    PanelIllConditioned,
)
from .rds import (
    sphere_exp,
    sphere_log,
    geodesic_distance,
    project_tangent,
    tangent_frames,
    haar_tangent_frames,
    antipodal_quotient,
    TangentField,
    HarmonicTangentField,
    SphereMap,
    PerturbedMap,
    LyapunovSpectrum,
    compare_runs,
    EmpiricalMeasure,
    RandomDynamicalSystem,
    load_system,
    system_to_dict,
    reference_generators,
    reference_system,
    AntipodalPoints,
    NumericalBlowup,
)
from .grassmann import (
    SubspaceFrame,
    subspace_det,
    log_subspace_det,
    log_gram_volume,
    haar_frames,
    haar_grassmannian,
    lambda_r_taylor,
    lambda_r_taylor_terms,
    lambda_per_exponent_taylor,
    metric_taylor,
    strain_expansion_coefficients,
    lambda_r_mc,
    metric_lambda_mc,
    sphere_moments,
    push_frames,
    induced_map,
    chart_induced_map,
    principal_angles,
    RankDeficient,
)
from .strain import (
    StrainSample,
    split_strain,
    pullback_metric,
    strain_at,
    strain_norms,
    lambda_r_strain_expansion,
)
from .kam import (
    GeodesicFlowMap,
    InverseGeodesicFlowMap,
    ConjugatedMap,
    ErrorField,
    error_field,
    c0_distance,
    extract_isometry,
    constructive_isometry,
    refine_isometry,
    Schedule,
    KamStepReport,
    KamRun,
    kam_step,
    kam_run,
    check_diophantine,
    top_bottom_symmetry,
    symmetry_scaling,
    TooFarFromIsometry,
    InversionNotConverged,
)
from .cli import ExperimentConfig, ExperimentReportWriter, ConfigInvalid, run

from .version import __version__
