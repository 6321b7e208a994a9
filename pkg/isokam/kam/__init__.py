from ..rds import (
    GeodesicFlowMap,
    InverseGeodesicFlowMap,
    ConjugatedMap,
    InversionNotConverged,
)
from .ErrorField import ErrorField, error_field, c0_distance, default_panel_size
from .extraction import (
    extract_isometry,
    constructive_isometry,
    refine_isometry,
    plane_rotation_between,
)
from .Schedule import Schedule
from .KamStepReport import KamStepReport, KamRun
from .kam_step import kam_step, kam_run, check_diophantine
from .symmetry import top_bottom_symmetry, symmetry_scaling
from .errors import TooFarFromIsometry
