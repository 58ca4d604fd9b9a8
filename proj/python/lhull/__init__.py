"""Left inverse hulls of left cancellative semigroups."""

from lhull._core import (
    InvariantViolation,
    ParseError,
    PreconditionError,
    Semigroup,
    UnsupportedOperation,
    UsageError,
    subcommands,
)


def load(path):
    """Semigroup from a configuration file."""
    with open(path, encoding="utf-8") as f:
        return Semigroup(f.read())


__all__ = [
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "Semigroup",
    "UnsupportedOperation",
    "UsageError",
    "load",
    "subcommands",
]
