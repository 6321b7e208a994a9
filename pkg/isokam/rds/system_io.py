"""Reading, writing and building reference random dynamical systems."""

import json

import numpy as np

from ..liegroup import GeneratorTuple
from ..harmonic import HarmonicCoeffs
from .TangentField import TangentField
from .HarmonicTangentField import HarmonicTangentField
from .PerturbedMap import PerturbedMap
from .ConjugatedMap import ConjugatedMap
from .RandomDynamicalSystem import RandomDynamicalSystem

REFERENCE_KINDS = ("isometric", "generic", "mean_free", "conjugated")


def field_from_dict(data):
    if "harmonic" in data:
        return HarmonicTangentField(HarmonicCoeffs.from_dict(data["harmonic"]))
    return TangentField.from_dict(data)


def load_system(source):
    """Build a RandomDynamicalSystem from a system JSON file or dict.

    The format is ``{"dim": d, "maps": [{"rotation": [[...]], "field":
    {"exponents": [[...]], "coefficients": [[...]]}}, ...], "scale": s}``.
    A map without "field" is an isometry; the optional "scale" multiplies
    every field.
    """
    if isinstance(source, dict):
        data = source
    else:
        with open(source, "r") as f:
            data = json.load(f)
    scale = float(data.get("scale", 1.0))
    maps = []
    for map_data in data["maps"]:
        field = None
        if map_data.get("field") is not None:
            field = field_from_dict(map_data["field"])
            if scale != 1.0:
                field = field.scaled(scale)
        maps.append(PerturbedMap(np.array(map_data["rotation"]), field))
    system = RandomDynamicalSystem(maps)
    if "dim" in data and int(data["dim"]) != system.dim:
        raise ValueError(
            "The system file declares dim %s but its maps act on S^%d"
            % (data["dim"], system.dim)
        )
    return system


def system_to_dict(system):
    """Inverse of ``load_system`` for systems of PerturbedMap instances."""
    return {"dim": system.dim, "maps": [f.to_dict() for f in system.maps]}


def reference_generators(dim, seed=0):
    """Golden-angle pair on S^2, a seeded Haar pair on higher spheres."""
    if dim == 2:
        return GeneratorTuple.reference_pair()
    return GeneratorTuple.random(dim + 1, 2, seed)


def reference_system(dim=2, epsilon=0.0, kind="generic", seed=0, field_degree=3):
    """Perturbations of the reference pair used across the experiments.

    Parameters
    ----------

    dim
      Dimension d of the sphere S^d.

    epsilon
      C0 size of the perturbation fields.

    kind
      "isometric" (no fields), "generic" (independent random fields),
      "mean_free" (Y_2 = -Y_1, so the mean field vanishes) or "conjugated"
      (f_i = psi_W R_i psi_W^-1 with W the gradient of a linear function,
      a system conjugate to isometries).

    seed
      Seed of the fields (and of the Haar pair when dim > 2).

    field_degree
      Polynomial degree of the random fields.
    """
    if kind not in REFERENCE_KINDS:
        raise ValueError("Unknown reference kind %s, use one of %s" % (kind, REFERENCE_KINDS))
    generators = reference_generators(dim, seed)
    if kind == "isometric":
        return RandomDynamicalSystem([PerturbedMap(g) for g in generators])
    if kind == "conjugated":
        field = TangentField.random(dim, 0, scale=epsilon, seed=[seed, 0])
        return RandomDynamicalSystem(
            [ConjugatedMap(PerturbedMap(g), field) for g in generators]
        )
    first = TangentField.random(dim, field_degree, scale=epsilon, seed=[seed, 0])
    if kind == "mean_free":
        fields = [first, -first]
    else:
        second = TangentField.random(dim, field_degree, scale=epsilon, seed=[seed, 1])
        fields = [first, second]
    return RandomDynamicalSystem(
        [PerturbedMap(g, field) for g, field in zip(generators, fields)]
    )
