import os
import json

from .errors import ConfigInvalid

FILE_FIELDS = ("system", "generators", "target", "phi")
CONFIG_FIELDS = ("command", "parameters", "seed", "threads", "output") + FILE_FIELDS


class Parameter:
    """One numeric (or textual) knob of a command.

    Parameters
    ----------

    name
      Name of the parameter in the config, and of the ``--name`` option.

    kind
      One of int, float, bool, str, or "floats" for a list of floats.

    default
      Value used when the config does not set the parameter.

    minimum, maximum
      Inclusive bounds for numbers (and for each element of a list).

    choices
      Accepted values for strings.

    help
      Help text of the command-line option.

    flags
      Extra command-line spellings of the option, e.g. ("--lmax",).
    """

    def __init__(
        self,
        name,
        kind,
        default,
        minimum=None,
        maximum=None,
        choices=None,
        help="",
        flags=(),
    ):
        self.name = name
        self.kind = kind
        self.default = default
        self.minimum = minimum
        self.maximum = maximum
        self.choices = choices
        self.help = help
        self.flags = tuple(flags)

    def _check_number(self, value, field_path):
        if self.minimum is not None and value < self.minimum:
            raise ConfigInvalid(field_path, "must be >= %s, got %s" % (self.minimum, value))
        if self.maximum is not None and value > self.maximum:
            raise ConfigInvalid(field_path, "must be <= %s, got %s" % (self.maximum, value))

    def validate(self, value):
        """Return the value converted to the parameter's type, or raise
        ConfigInvalid."""
        field_path = "parameters." + self.name
        if self.kind is bool:
            if not isinstance(value, bool):
                raise ConfigInvalid(field_path, "expected true or false, got %r" % value)
            return value
        if self.kind is int:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigInvalid(field_path, "expected an integer, got %r" % value)
            if int(value) != value:
                raise ConfigInvalid(field_path, "expected an integer, got %r" % value)
            self._check_number(int(value), field_path)
            return int(value)
        if self.kind is float:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigInvalid(field_path, "expected a number, got %r" % value)
            self._check_number(float(value), field_path)
            return float(value)
        if self.kind == "floats":
            if not isinstance(value, (list, tuple)) or len(value) == 0:
                raise ConfigInvalid(field_path, "expected a list of numbers, got %r" % value)
            values = []
            for element in value:
                if isinstance(element, bool) or not isinstance(element, (int, float)):
                    raise ConfigInvalid(field_path, "expected numbers, got %r" % element)
                self._check_number(float(element), field_path)
                values.append(float(element))
            return values
        if not isinstance(value, str):
            raise ConfigInvalid(field_path, "expected a string, got %r" % value)
        if self.choices is not None and value not in self.choices:
            raise ConfigInvalid(
                field_path,
                "must be one of %s, got %s" % (", ".join(self.choices), value),
            )
        return value


SYSTEM_KINDS = ("isometric", "generic", "mean_free", "conjugated")


def _reference_system_parameters(epsilon=0.0, kind="generic", max_dim=None):
    return [
        Parameter(
            "dim", int, 2, minimum=2, maximum=max_dim, help="Dimension d of the sphere S^d."
        ),
        Parameter("epsilon", float, epsilon, minimum=0, help="Size of the perturbation."),
        Parameter("kind", str, kind, choices=SYSTEM_KINDS, help="Reference system."),
    ]


COMMAND_PARAMETERS = {
    "sk-compile": [
        Parameter("epsilon", float, 0.05, minimum=0, help="Required accuracy."),
        Parameter("depth", int, 3, minimum=0, help="Solovay-Kitaev depth."),
        Parameter("net_epsilon", float, 0.12, minimum=0),
        Parameter("net_max_len", int, 16, minimum=1),
        Parameter("inverse_free", bool, False, help="Compile without inverses."),
        Parameter("balanced", bool, False, help="Start from balanced net words."),
        Parameter("n_max", int, 10 ** 7, minimum=1, help="Inverse power scan budget."),
        Parameter("n_targets", int, 1, minimum=1, help="Haar targets if no file."),
    ],
    "gap": [
        Parameter("l_max", int, 32, minimum=1, flags=("--lmax",)),
        Parameter("n_powers", int, 16, minimum=1),
    ],
    "coboundary": [
        Parameter(
            "l_max", int, 16, minimum=1, help="Degree of the random phi.", flags=("--lmax",)
        ),
        Parameter("tolerance", float, 1e-12, minimum=0),
    ],
    "lyapunov": _reference_system_parameters()
    + [
        Parameter("n_steps", int, 10 ** 5, minimum=1000, flags=("--steps",)),
        Parameter("n_walkers", int, 1, minimum=1),
        Parameter("burn_in", int, 0, minimum=0),
        Parameter("n_batches", int, 20, minimum=2),
    ],
    "strain": _reference_system_parameters(epsilon=0.02, kind="mean_free")
    + [Parameter("n_quad", int, 10 ** 5, minimum=1000, flags=("--nquad",))],
    "grassmann-check": [
        Parameter("dim", int, 4, minimum=2),
        Parameter("r", int, 2, minimum=1, help="Rank of the r-planes.", flags=("--rank",)),
        Parameter("norm", float, 0.05, minimum=0, help="Frobenius norm of each L."),
        Parameter("n_matrices", int, 20, minimum=1),
        Parameter("samples", int, 10 ** 6, minimum=2),
    ],
    "kam-step": _reference_system_parameters(epsilon=1e-3, kind="conjugated", max_dim=2)
    + [
        Parameter(
            "cutoff", float, 10.0, minimum=0, help="Smoothing cutoff.", flags=("--lambda",)
        ),
        Parameter("l_max", int, 16, minimum=1, flags=("--lmax",)),
        Parameter("s", float, 4.0, minimum=0),
        Parameter("n_quad", int, 2000, minimum=1000, flags=("--nquad",)),
        Parameter("extraction_points", int, 10 ** 4, minimum=10),
    ],
    "kam-run": _reference_system_parameters(epsilon=1e-3, kind="conjugated", max_dim=2)
    + [
        Parameter("schedule", str, "100,1,0.1,3", help="N,ALPHA,TAU,STEPS"),
        Parameter("l_max", int, 16, minimum=1, flags=("--lmax",)),
        Parameter("s", float, 4.0, minimum=0),
        Parameter("n_quad", int, 2000, minimum=1000, flags=("--nquad",)),
        Parameter("extraction_points", int, 10 ** 4, minimum=10),
    ],
    "symmetry": [
        Parameter("dim", int, 3, minimum=2),
        Parameter("epsilons", "floats", [0.02, 0.01], minimum=0),
        Parameter("n_steps", int, 10 ** 5, minimum=1000, flags=("--steps",)),
        Parameter("n_walkers", int, 1, minimum=1),
        Parameter("n_quad", int, 10 ** 5, minimum=1000, flags=("--nquad",)),
        Parameter("predict", bool, True),
    ],
    "moments": [
        Parameter("dim", int, 3, minimum=2, help="Ambient dimension d of S^(d-1)."),
        Parameter("samples", int, 10 ** 6, minimum=2),
    ],
}

COMMANDS = sorted(COMMAND_PARAMETERS)


class ExperimentConfig:
    """Complete, serializable description of one experiment run.

    The config embedded in an output is the validated one, with every
    default filled in, so running it again reproduces the output.

    Parameters
    ----------

    command
      Name of the subcommand, e.g. "lyapunov".

    system, generators, target, phi
      Paths to the input files (system JSON, generator matrices, target
      matrices, harmonic coefficients JSON), or None.

    parameters
      Dict of the command's numeric parameters.

    seed
      Master seed of every random draw of the run.

    threads
      Number of worker threads, or "auto" for the number of cores (the
      ISOKAM_THREADS environment variable overrides it). Results do not
      depend on it.

    output
      Folder or zip path where the report is written, "@memory", or None
      to print the JSON result.
    """

    def __init__(
        self,
        command,
        parameters=None,
        seed=0,
        threads="auto",
        output=None,
        system=None,
        generators=None,
        target=None,
        phi=None,
    ):
        self.command = command
        self.parameters = dict(parameters or {})
        self.seed = seed
        self.threads = threads
        self.output = output
        self.system = system
        self.generators = generators
        self.target = target
        self.phi = phi

    @classmethod
    def from_dict(cls, data):
        """Build a config from a dict, rejecting unknown fields."""
        if not isinstance(data, dict):
            raise ConfigInvalid("config", "expected a JSON object")
        for key in data:
            if key not in CONFIG_FIELDS:
                raise ConfigInvalid(key, "unknown config field", CONFIG_FIELDS)
        if "command" not in data:
            raise ConfigInvalid("command", "missing")
        return cls(**data)

    @classmethod
    def from_json_file(cls, path):
        """Read a config file, or the config embedded in a previous output."""
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except (OSError, ValueError) as error:
            raise ConfigInvalid("config", "cannot read %s (%s)" % (path, error))
        if isinstance(data, dict) and "config" in data and "result" in data:
            data = data["config"]
        return cls.from_dict(data)

    @property
    def schema(self):
        return {parameter.name: parameter for parameter in COMMAND_PARAMETERS[self.command]}

    def validate(self):
        """Check every field and fill in the default parameters.

        Returns the config itself, raises ConfigInvalid with the path of the
        first faulty field.
        """
        if self.command not in COMMAND_PARAMETERS:
            raise ConfigInvalid(
                "command",
                "unknown command %s" % self.command,
                COMMANDS,
                query=self.command,
            )
        schema = self.schema
        if not isinstance(self.parameters, dict):
            raise ConfigInvalid("parameters", "expected a JSON object")
        for name in self.parameters:
            if name not in schema:
                raise ConfigInvalid(
                    "parameters." + name,
                    "unknown parameter for command %s" % self.command,
                    list(schema),
                )
        self.parameters = {
            name: parameter.validate(self.parameters.get(name, parameter.default))
            for name, parameter in schema.items()
        }
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigInvalid("seed", "expected a non-negative integer, got %r" % self.seed)
        if self.threads != "auto":
            if isinstance(self.threads, bool) or not isinstance(self.threads, int):
                raise ConfigInvalid("threads", "expected an integer or auto")
            if self.threads < 1:
                raise ConfigInvalid("threads", "must be >= 1, got %d" % self.threads)
        for field in FILE_FIELDS:
            path = getattr(self, field)
            if path is None:
                continue
            if not isinstance(path, str):
                raise ConfigInvalid(field, "expected a file path, got %r" % path)
            if not os.path.exists(path):
                raise ConfigInvalid(field, "file not found: %s" % path)
        if self.output is not None and not isinstance(self.output, str):
            raise ConfigInvalid("output", "expected a path, got %r" % self.output)
        return self

    def to_dict(self):
        return {field: getattr(self, field) for field in CONFIG_FIELDS}

    def __repr__(self):
        return "ExperimentConfig(%s)" % self.command
