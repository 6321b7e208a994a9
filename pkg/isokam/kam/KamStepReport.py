import numpy as np
import pandas

from ..tools import format_value_for_report


class KamStepReport:
    """Everything measured during one KAM step.

    Parameters
    ----------

    cutoff
      The smoothing cutoff lambda.

    eps_before, eps_after
      Dicts with keys "0" (largest panel C0 distance between each map and
      its isometry), "1", "2" and "s" (largest H^k norm of the fitted error
      fields), measured before the step and after it on the conjugated maps
      and their extracted isometries.

    strain_before, strain_after
      Per-map integrals of |f*g - g|^2.

    rotation_distances
      Distances d(R_i, R_i') between old and new isometries.

    mean_field_before, mean_field_after
      L2 norms of the low modes (c_l < cutoff) of the mean error field,
      before the step and after it relative to the old isometries.

    conjugacy
      The field V as a HarmonicTangentField (None if the step was trivial
      or failed).

    diagnostics
      Dict of residuals: coboundary residual, fit residuals, inversion
      residual.

    maps, rotations
      The conjugated maps and the extracted isometries, inputs of the next
      step.

    error
      The IsokamError that stopped the step, if any.
    """

    def __init__(
        self,
        step,
        cutoff,
        eps_before=None,
        eps_after=None,
        strain_before=None,
        strain_after=None,
        rotation_distances=None,
        mean_field_before=None,
        mean_field_after=None,
        conjugacy=None,
        diagnostics=None,
        maps=None,
        rotations=None,
        error=None,
    ):
        self.step = step
        self.cutoff = cutoff
        self.eps_before = eps_before or {}
        self.eps_after = eps_after or {}
        self.strain_before = strain_before or []
        self.strain_after = strain_after or []
        self.rotation_distances = rotation_distances or []
        self.mean_field_before = mean_field_before
        self.mean_field_after = mean_field_after
        self.conjugacy = conjugacy
        self.diagnostics = diagnostics or {}
        self.maps = maps
        self.rotations = rotations
        self.error = error
        self.stagnated = False

    @property
    def failed(self):
        return self.error is not None

    @property
    def mean_field_reduction(self):
        """Ratio mean_field_after / mean_field_before (0 when nothing to do)."""
        if not self.mean_field_before:
            return 0.0
        return self.mean_field_after / self.mean_field_before

    def to_dict(self):
        data = dict(
            step=self.step,
            cutoff=self.cutoff,
            eps_before=self.eps_before,
            eps_after=self.eps_after,
            strain_before=self.strain_before,
            strain_after=self.strain_after,
            rotation_distances=self.rotation_distances,
            mean_field_before=self.mean_field_before,
            mean_field_after=self.mean_field_after,
            diagnostics=self.diagnostics,
            stagnated=self.stagnated,
            rotations=[r.to_list() for r in self.rotations or []],
        )
        if self.conjugacy is not None:
            data["conjugacy"] = self.conjugacy.coeffs.to_dict()
        if self.error is not None:
            data["error"] = dict(
                name=self.error.__class__.__name__,
                message=self.error.message,
                data=self.error.data,
            )
        return data

    def summary(self):
        """One-line text summary of the step."""
        if self.failed:
            return "step %d failed: %s (%s)" % (
                self.step,
                self.error,
                self.error.data_as_string(),
            )
        return "step %d (cutoff %s): eps_0 %s -> %s" % (
            self.step,
            format_value_for_report(self.cutoff),
            format_value_for_report(self.eps_before.get("0")),
            format_value_for_report(self.eps_after.get("0")),
        )

    def __repr__(self):
        return "KamStepReport(%s)" % self.summary()


class KamRun(list):
    """List of the KamStepReport of an iterated run."""

    def epsilon_trace(self):
        """Dataframe with columns step, lambda, eps_0, eps_2, strain_H0, dist_R.

        Row 0 holds the values before the first step, row n those after
        step n.
        """
        rows = []
        for report in self:
            if report.failed:
                break
            if len(rows) == 0:
                rows.append(
                    dict(
                        step=0,
                        eps_0=report.eps_before["0"],
                        eps_2=report.eps_before["2"],
                        strain_H0=max(report.strain_before),
                        dist_R=0.0,
                    )
                )
            rows.append(
                dict(
                    step=report.step + 1,
                    eps_0=report.eps_after["0"],
                    eps_2=report.eps_after["2"],
                    strain_H0=max(report.strain_after),
                    dist_R=max(report.rotation_distances),
                )
            )
        dataframe = pandas.DataFrame(
            rows, columns=["step", "eps_0", "eps_2", "strain_H0", "dist_R"]
        )
        cutoffs = [np.nan] + [report.cutoff for report in self[: len(rows) - 1]]
        dataframe.insert(1, "lambda", cutoffs[: len(rows)])
        return dataframe

    @property
    def stagnated(self):
        return any(report.stagnated for report in self)

    @property
    def errors(self):
        return [report.error for report in self if report.error is not None]

    def to_list(self):
        return [report.to_dict() for report in self]
