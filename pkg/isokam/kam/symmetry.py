"""Symmetry between the top and bottom Lyapunov exponents."""

import warnings

import numpy as np
from proglog import default_bar_logger

from ..rds import PerturbedMap, RandomDynamicalSystem, TangentField
from ..strain import lambda_r_strain_expansion
from .ErrorField import c0_distance


def top_bottom_symmetry(
    maps,
    rotations=None,
    n_steps=10 ** 5,
    seed=0,
    n_walkers=1,
    x0="haar",
    predict=True,
    n_quad=10 ** 5,
    logger=None,
):
    """Measure the defect |lambda_1 + lambda_d - (2/d) Lambda_d|.

    At second order in the perturbation both the conformal and the
    non-conformal strain contributions cancel in this combination, so it
    should be small compared with |lambda_d|. On S^2 it vanishes
    identically (Lambda_2 = lambda_1 + lambda_2) and a UserWarning is
    emitted.

    Parameters
    ----------

    maps
      RandomDynamicalSystem or list of sphere maps.

    rotations
      Optional reference isometries: the report then includes the size
      ``epsilon`` of the perturbation (largest panel C0 distance).

    predict
      Also report the strain-expansion predictions of lambda_1, lambda_d
      and Lambda_d.

    Returns a dict with the exponents, the defect, its standard error and
    the ratio defect / |lambda_d|.
    """
    logger = default_bar_logger(logger)
    system = maps if isinstance(maps, RandomDynamicalSystem) else RandomDynamicalSystem(maps)
    d = system.dim
    if d == 2:
        warnings.warn(
            "On S^2 the top/bottom defect is identically zero.", UserWarning
        )
    spectrum = system.lyapunov_spectrum(
        x0=x0, n_steps=n_steps, seed=seed, n_walkers=n_walkers, logger=logger
    )
    weights = -2.0 / d * np.ones(d)
    weights[0] += 1
    weights[-1] += 1
    combination, combination_error = spectrum.combination(weights)
    Lambda_d, Lambda_d_error = spectrum.combination(np.ones(d))
    defect = abs(combination)
    result = dict(
        dim=d,
        lambda_1=float(spectrum.exponents[0]),
        lambda_1_se=float(spectrum.standard_errors[0]),
        lambda_d=float(spectrum.exponents[-1]),
        lambda_d_se=float(spectrum.standard_errors[-1]),
        Lambda_d=Lambda_d,
        Lambda_d_se=Lambda_d_error,
        defect=defect,
        defect_se=combination_error,
        relative_defect=defect / abs(spectrum.exponents[-1])
        if spectrum.exponents[-1] != 0
        else np.nan,
    )
    if rotations is not None:
        result["epsilon"] = max(c0_distance(f, R) for f, R in zip(system.maps, rotations))
    if predict:
        top = lambda_r_strain_expansion(system, 1, n_quad, seed)
        bottom = lambda_r_strain_expansion(system, d, n_quad, seed)
        result.update(
            predicted_lambda_1=top["lambda_r"],
            predicted_lambda_d=bottom["lambda_r"],
            predicted_Lambda_d=bottom["Lambda_r"],
        )
    return result


def symmetry_scaling(
    rotations,
    fields=None,
    epsilons=(0.02, 0.01),
    n_steps=10 ** 5,
    seed=0,
    n_walkers=1,
    field_seed=0,
    predict=False,
    n_quad=10 ** 5,
    logger=None,
):
    """Run top_bottom_symmetry on mean-field-free perturbations of sizes eps.

    Parameters
    ----------

    rotations
      GeneratorTuple or list of isometries R_i.

    fields
      One TangentField per rotation, summing to zero. Defaults to (Y, -Y)
      for a pair, Y a random cubic field with unit C0 norm.

    epsilons
      Sizes of the perturbations f_i = psi_{eps Y_i} R_i.

    predict, n_quad
      Passed to top_bottom_symmetry (strain predictions, off by default).

    Returns a list of dicts (one per epsilon) with the keys of
    top_bottom_symmetry plus ``epsilon``.
    """
    rotations = list(rotations)
    if fields is None:
        if len(rotations) != 2:
            raise ValueError("Default mean-free fields need exactly two rotations.")
        dim = rotations[0].dim - 1
        field = TangentField.random(dim, 3, scale=1.0, seed=field_seed)
        fields = [field, -field]
    reports = []
    for epsilon in epsilons:
        maps = [PerturbedMap(R, Y.scaled(epsilon)) for R, Y in zip(rotations, fields)]
        report = top_bottom_symmetry(
            maps,
            n_steps=n_steps,
            seed=seed,
            n_walkers=n_walkers,
            predict=predict,
            n_quad=n_quad,
            logger=logger,
        )
        report["epsilon"] = epsilon
        reports.append(report)
    return reports
