from .ExperimentConfig import ExperimentConfig, Parameter, COMMAND_PARAMETERS, COMMANDS
from .ExperimentReportWriter import ExperimentReportWriter
from .commands import COMMAND_FUNCTIONS
from .run import run, main, build_parser, config_from_arguments
from .run import EXIT_SUCCESS, EXIT_CONFIG_ERROR, EXIT_DOMAIN_ERROR
from .errors import ConfigInvalid
