from .sphere_geometry import (
    sphere_exp,
    sphere_log,
    geodesic_distance,
    project_tangent,
    tangent_frames,
    haar_tangent_frames,
    antipodal_quotient,
    normalize,
)
from .TangentField import TangentField, monomial_exponents
from .HarmonicTangentField import HarmonicTangentField
from .SphereMap import SphereMap
from .PerturbedMap import PerturbedMap
from .GeodesicFlowMap import GeodesicFlowMap, InverseGeodesicFlowMap
from .ConjugatedMap import ConjugatedMap
from .LyapunovSpectrum import LyapunovSpectrum, compare_runs
from .EmpiricalMeasure import EmpiricalMeasure
from .RandomDynamicalSystem import RandomDynamicalSystem
from .system_io import (
    load_system,
    system_to_dict,
    reference_generators,
    reference_system,
    field_from_dict,
)
from .errors import AntipodalPoints, NumericalBlowup, InversionNotConverged
