import logging
import sys
from typing import List, Optional

from lackwalk.cli.commands import cmd_analytic, cmd_heatmap, cmd_simulate, cmd_verify
from lackwalk.cli.config import RunConfig, build_config
from lackwalk.shared.exceptions import ConfigError, LackwalkError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def run(config: RunConfig) -> int:
    """Dispatches to the subcommand and turns its outcome into an exit code."""
    if config.command == "simulate":
        cmd_simulate(config)
    elif config.command == "analytic":
        cmd_analytic(config)
    elif config.command == "heatmap":
        cmd_heatmap(config)
    else:
        results = cmd_verify(config)
        if not all(result.passed for result in results):
            return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the `lackwalk` command.

    Returns:
        int: 0 on success, 1 on a numerical or validation failure, 2 on a
            usage error.
    """
    try:
        config = build_config(argv)
    except ConfigError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except LackwalkError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_FAILURE
    logging.basicConfig(level=config.log_level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return run(config)
    except ConfigError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except LackwalkError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_FAILURE
