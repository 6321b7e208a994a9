import sys
import argparse

from proglog import TqdmProgressBarLogger, default_bar_logger

from ..IsokamError import IsokamError
from .ExperimentConfig import ExperimentConfig, COMMAND_PARAMETERS, COMMANDS
from .ExperimentReportWriter import ExperimentReportWriter
from .commands import COMMAND_FUNCTIONS
from .errors import ConfigInvalid

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 2
EXIT_DOMAIN_ERROR = 3


def run(config, logger=None, report_writer="default"):
    """Validate a config, run its command and write the output.

    Parameters
    ----------

    config
      An ExperimentConfig, or a dict accepted by ExperimentConfig.from_dict.

    logger
      Either "bar" for a progress bar, or None, or any Proglog logger.

    report_writer
      ExperimentReportWriter used when ``config.output`` is set.

    Returns
    -------

    (exit_status, output, error): the status is 0 on success, 2 for an
    invalid config and 3 for a domain error. The output is the JSON text
    when the config has no output target, else what the report writer
    returns (the zip data for "@memory" and ".zip" targets). The error is
    the IsokamError that stopped the run, or None.
    """
    logger = default_bar_logger(logger)
    if report_writer == "default":
        report_writer = ExperimentReportWriter()
    result, tables, error = None, {}, None
    try:
        if isinstance(config, dict):
            config = ExperimentConfig.from_dict(config)
        config.validate()
    except ConfigInvalid as config_error:
        if not isinstance(config, ExperimentConfig):
            config = ExperimentConfig(command=None)
        error = config_error
    else:
        logger(message="Running %s..." % config.command)
        try:
            result, tables, error = COMMAND_FUNCTIONS[config.command](config, logger)
        except IsokamError as domain_error:
            error = domain_error
    if error is None:
        status = EXIT_SUCCESS
    elif isinstance(error, ConfigInvalid):
        status = EXIT_CONFIG_ERROR
    else:
        status = EXIT_DOMAIN_ERROR
    if config.output is None:
        output = ExperimentReportWriter.result_json(config, result, error)
    else:
        output = report_writer.write_report(
            config, result, tables, target=config.output, error=error
        )
    return status, output, error


def _add_run_options(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--config", default=default, help="Config or output JSON to replay.")
    parser.add_argument("--output", default=default, help="Folder, .zip or @memory.")
    parser.add_argument("--threads", type=int, default=default)
    parser.add_argument("--seed", type=int, default=default)
    for field in ("system", "generators", "target", "phi"):
        parser.add_argument("--" + field, default=default)


def _add_parameter_option(parser, parameter):
    options = ["--" + parameter.name.replace("_", "-")] + list(parameter.flags)
    if parameter.kind is bool:
        parser.add_argument(
            *options,
            dest=parameter.name,
            type=lambda text: text.lower() in ("1", "true", "yes"),
            default=argparse.SUPPRESS,
            help=parameter.help,
        )
    elif parameter.kind == "floats":
        parser.add_argument(
            *options,
            dest=parameter.name,
            type=float,
            nargs="+",
            default=argparse.SUPPRESS,
            help=parameter.help,
        )
    else:
        parser.add_argument(
            *options,
            dest=parameter.name,
            type=parameter.kind,
            default=argparse.SUPPRESS,
            help=parameter.help,
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isokam",
        description="Linearization experiments for random isometric systems on spheres.",
    )
    _add_run_options(parser, suppress=False)
    subparsers = parser.add_subparsers(dest="command")
    for command in COMMANDS:
        subparser = subparsers.add_parser(command)
        _add_run_options(subparser, suppress=True)
        for parameter in COMMAND_PARAMETERS[command]:
            _add_parameter_option(subparser, parameter)
    return parser


def config_from_arguments(arguments):
    """Merge a replayed config (if any) with the command-line options."""
    options = vars(arguments)
    if options.get("config") is not None:
        config = ExperimentConfig.from_json_file(options["config"])
        if options.get("command") not in (None, config.command):
            raise ConfigInvalid(
                "command",
                "%s does not match the replayed command %s"
                % (options["command"], config.command),
            )
    elif options.get("command") is None:
        raise ConfigInvalid("command", "missing, use one of %s" % ", ".join(COMMANDS))
    else:
        config = ExperimentConfig(command=options["command"])
    for field in ("output", "threads", "seed", "system", "generators", "target", "phi"):
        if options.get(field) is not None:
            setattr(config, field, options[field])
    if config.command in COMMAND_PARAMETERS:
        for parameter in COMMAND_PARAMETERS[config.command]:
            if parameter.name in options:
                config.parameters[parameter.name] = options[parameter.name]
    return config


def main(argv=None):
    """Command line entry point, returns the exit status."""
    arguments = build_parser().parse_args(argv)
    try:
        config = config_from_arguments(arguments)
    except ConfigInvalid as error:
        sys.stderr.write("%s: %s\n" % (error.__class__.__name__, error))
        return EXIT_CONFIG_ERROR
    # Progress bars go to stderr, the JSON result alone to stdout.
    logger = TqdmProgressBarLogger(print_messages=False)
    status, output, error = run(config, logger=logger)
    if config.output is None:
        sys.stdout.write(output)
    if error is not None:
        sys.stderr.write("%s: %s\n" % (error.__class__.__name__, error))
    return status
