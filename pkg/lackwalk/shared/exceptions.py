class LackwalkError(Exception):
    """Base error for everything raised by lackwalk."""

    pass


class InstanceError(LackwalkError):
    """Error when building or indexing a bipartite search instance."""

    pass


class ModelError(LackwalkError):
    """Error when an instance does not fit the requested subspace case."""

    pass


class FormulaError(LackwalkError):
    """Error when a closed form is unavailable or singular for the inputs."""

    pass


class ConfigError(LackwalkError):
    """Error when parsing command-line flags or a config file."""

    pass


class VerificationError(LackwalkError):
    """Error when an invariant check fails."""

    pass


class OutputError(LackwalkError):
    """Error when a CSV file cannot be written or read back."""

    pass
