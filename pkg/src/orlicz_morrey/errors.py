"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NonConvergenceError(RuntimeError):
    """Bracketing of a window norm did not terminate."""


class ConfigError(ValueError):
    """A suite configuration or input document is malformed."""
