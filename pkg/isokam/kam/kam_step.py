"""One KAM step and its iteration along a cutoff schedule."""

import numpy as np
from proglog import default_bar_logger

from ..IsokamError import IsokamError
from ..liegroup import GroupElement, GeneratorTuple, distance
from ..harmonic import (
    NotDiophantineAtDegree,
    diophantine_margin,
    haar_sphere_points,
    smooth_truncate,
    solve_coboundary,
)
from ..rds import ConjugatedMap, HarmonicTangentField
from ..strain import strain_norms
from .ErrorField import default_panel_size, error_field
from .extraction import extract_isometry
from .KamStepReport import KamStepReport, KamRun

SINGULAR_TOLERANCE = 1e-12
CONVERGENCE_FLOOR = 1e-14


def _mean_coeffs(fields):
    total = fields[0].coeffs
    for field in fields[1:]:
        total = total + field.coeffs
    return (1.0 / len(fields)) * total


def _epsilons(fields, s):
    return {
        "0": max(field.c0_norm for field in fields),
        "1": max(field.sobolev_norm(1) for field in fields),
        "2": max(field.sobolev_norm(2) for field in fields),
        "s": max(field.sobolev_norm(s) for field in fields),
    }


def check_diophantine(S, l_max, tolerance=SINGULAR_TOLERANCE):
    """Raise NotDiophantineAtDegree at the first degree l <= l_max where
    the tuple has an invariant scalar harmonic."""
    for degree in range(1, l_max + 1):
        margin = diophantine_margin(S, degree)
        if margin <= tolerance:
            raise NotDiophantineAtDegree(degree, margin, tolerance)


def kam_step(
    maps,
    rotations,
    cutoff,
    l_max=16,
    s=4,
    n_points=None,
    n_quad=2000,
    extraction_points=10 ** 4,
    seed=0,
    step=0,
    tolerance=SINGULAR_TOLERANCE,
    threads=None,
    logger=None,
):
    """Conjugate the maps by psi_V to cancel their low-mode mean error field.

    With Y_i the error fields of f_i relative to R_i, the conjugacy field is
    V = -(I - L)^-1 T_cutoff (1/m) sum_i Y_i, where L is the push-forward
    average of the R_i. The conjugated maps psi_V f_i psi_V^-1 then get new
    isometries R_i' by extraction.

    Parameters
    ----------

    maps
      List of sphere maps f_i on S^2.

    rotations
      List of GroupElement R_i, Diophantine up to degree l_max.

    cutoff
      Smoothing cutoff lambda: the modes with c_l < lambda are corrected.

    l_max
      Degree of the harmonic fits of the error fields.

    s
      Sobolev index of the reported eps_s.

    n_points
      Size of the panel the error fields are sampled on.

    n_quad
      Number of points of the strain quadratures.

    extraction_points
      Size of the panel used by the isometry extraction.
    """
    logger = default_bar_logger(logger)
    maps = list(maps)
    rotations = [r if isinstance(r, GroupElement) else GroupElement(r) for r in rotations]
    S = GeneratorTuple(rotations)
    if S.dim != 3:
        raise ValueError("KAM steps are implemented on S^2, got rotations of R^%d" % S.dim)
    check_diophantine(S, l_max, tolerance)
    points = haar_sphere_points(3, n_points or default_panel_size(l_max), seed)

    fields = [error_field(f, R, l_max, points) for f, R in zip(maps, rotations)]
    low_modes = smooth_truncate(_mean_coeffs(fields), cutoff)[0]
    mean_field_before = low_modes.l2_norm()
    logger(message="Step %d: low-mode mean field %.3e" % (step, mean_field_before))

    conjugacy, coboundary_residual = None, 0.0
    new_maps = maps
    if mean_field_before > 0:
        solution = solve_coboundary(S, low_modes, tolerance, threads=threads)
        coboundary_residual = solution.fit_residual
        conjugacy = HarmonicTangentField(-solution)
        new_maps = [ConjugatedMap(f, conjugacy) for f in maps]

    new_rotations = [
        extract_isometry(f, R, n_points=extraction_points, seed=seed)
        for f, R in zip(new_maps, rotations)
    ]
    telescoped = [error_field(f, R, l_max, points) for f, R in zip(new_maps, rotations)]
    mean_field_after = smooth_truncate(_mean_coeffs(telescoped), cutoff)[0].l2_norm()
    fields_after = [
        error_field(f, R, l_max, points) for f, R in zip(new_maps, new_rotations)
    ]
    inversion_residuals = [
        f.inverse_flow.last_residual
        for f in new_maps
        if isinstance(f, ConjugatedMap) and f.inverse_flow.last_residual is not None
    ]
    report = KamStepReport(
        step=step,
        cutoff=cutoff,
        eps_before=_epsilons(fields, s),
        eps_after=_epsilons(fields_after, s),
        strain_before=[strain_norms(f, n_quad, seed)["H0_sq"] for f in maps],
        strain_after=[strain_norms(f, n_quad, seed)["H0_sq"] for f in new_maps],
        rotation_distances=[
            distance(R, R_new) for R, R_new in zip(rotations, new_rotations)
        ],
        mean_field_before=mean_field_before,
        mean_field_after=mean_field_after,
        conjugacy=conjugacy,
        diagnostics=dict(
            coboundary_residual=coboundary_residual,
            fit_residual_before=max(field.fit_residual for field in fields),
            fit_residual_after=max(field.fit_residual for field in fields_after),
            inversion_residual=max(inversion_residuals, default=0.0),
        ),
        maps=new_maps,
        rotations=new_rotations,
    )
    logger(message=report.summary())
    return report


def kam_run(maps, rotations, schedule, l_max=16, logger=None, **step_options):
    """Iterate kam_step with the cutoffs of a Schedule.

    The run stops at the first step raising an IsokamError (recorded in
    that step's report) or when eps_0 has failed to decrease in two
    consecutive steps while above 1e-14 (the last report is then flagged
    ``stagnated``).

    Returns a KamRun, the list of step reports.
    """
    logger = default_bar_logger(logger)
    run = KamRun()
    stalled_steps = 0
    for n in logger.iter_bar(kam_step=range(schedule.n_steps)):
        cutoff = schedule.cutoff(n)
        try:
            report = kam_step(
                maps, rotations, cutoff, l_max=l_max, step=n, logger=logger, **step_options
            )
        except IsokamError as error:
            logger(message="Step %d stopped: %s" % (n, error))
            run.append(KamStepReport(step=n, cutoff=cutoff, error=error))
            break
        run.append(report)
        before, after = report.eps_before["0"], report.eps_after["0"]
        if after >= before and after > CONVERGENCE_FLOOR:
            stalled_steps += 1
        else:
            stalled_steps = 0
        if stalled_steps >= 2:
            report.stagnated = True
            break
        maps, rotations = report.maps, report.rotations
    return run
