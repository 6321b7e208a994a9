from flametree import file_tree

from ..version import __version__
from ..tools import dumps_json

FLOAT_FORMAT = "%.17g"


class ExperimentReportWriter:
    """Class to configure and write experiment reports.

    Parameters
    ----------

    include_tables
      If True, the long traces (Lyapunov convergence, gap profile, KAM
      epsilon-trace...) are written as CSV files next to the JSON result.

    json_name
      Name of the JSON result file in the report.
    """

    def __init__(self, include_tables=True, json_name="result.json"):
        self.include_tables = include_tables
        self.json_name = json_name

    @staticmethod
    def result_json(config, result=None, error=None):
        """Return the JSON text of an output: config, result and version.

        No timestamp or host data is included so that equal configs give
        byte-identical outputs.
        """
        data = dict(
            config=config.to_dict(),
            result=result if result is not None else {},
            version=__version__,
        )
        if error is not None:
            data["error"] = error.to_dict()
        return dumps_json(data)

    def _write_tables(self, tables, report_root):
        for name, dataframe in sorted(tables.items()):
            if dataframe is None or len(dataframe) == 0:
                continue
            csv = dataframe.to_csv(index=False, float_format=FLOAT_FORMAT)
            report_root._file(name + ".csv").write(csv)

    def write_report(self, config, result=None, tables=None, target="@memory", error=None):
        """Write the JSON result and the CSV tables of a run.

        Parameters
        ----------

        config
          The validated ExperimentConfig of the run.

        result
          JSON-ready dict of results.

        tables
          Dict name -> pandas DataFrame, one CSV file per entry.

        target
          Either a path to a folder, or to a zip file, or "@memory" to return
          raw data of a zip file containing the report.

        error
          The IsokamError that stopped the run, if any.
        """
        report_root = file_tree(target, replace=True)
        report_root._file(self.json_name).write(self.result_json(config, result, error))
        if self.include_tables and tables:
            self._write_tables(tables, report_root)
        if (target == "@memory") or str(target).endswith(".zip"):
            return report_root._close()
