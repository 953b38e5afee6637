"""Exception types shared across the package."""


class DiscordSimError(Exception):
    """Base class for all package-specific errors."""


class UnphysicalParams(DiscordSimError):
    """Bell-diagonal coefficients that do not describe a positive state."""


class NumericalFailure(DiscordSimError):
    """An iterative numerical routine failed to converge."""


class NoTransition(DiscordSimError):
    """The correlation coefficients never produce a discord transition."""


class IncompleteKraus(DiscordSimError):
    """Kraus operators violate the completeness relation."""


class UnknownSequence(DiscordSimError):
    """Requested decoupling sequence name is not registered."""


class IncompleteRecord(DiscordSimError):
    """A tomography record is missing Pauli expectation entries."""


class ConfigError(DiscordSimError):
    """A simulation or scenario configuration violates a precondition."""


class DSLSyntaxError(DiscordSimError):
    """Malformed schedule text.  Carries 1-based line/column of the offence."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DSLSemanticError(DiscordSimError):
    """Schedule text parses but describes an invalid schedule."""
