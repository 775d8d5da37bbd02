"""Exception types shared by the library and the command line."""


class DomainError(ValueError):
    """An input violates a mathematical precondition."""


class ResourceCapError(RuntimeError):
    """A brute-force computation would exceed a configured size limit."""
