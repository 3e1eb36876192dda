from .exceptions import (
    ConfigError,
    FormulaError,
    InstanceError,
    LackwalkError,
    ModelError,
    OutputError,
    VerificationError,
)
from .trace import EvolutionTrace

__all__ = [
    "ConfigError",
    "EvolutionTrace",
    "FormulaError",
    "InstanceError",
    "LackwalkError",
    "ModelError",
    "OutputError",
    "VerificationError",
]
