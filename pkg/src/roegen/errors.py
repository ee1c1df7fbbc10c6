"""Exception hierarchy shared by every module."""


class RoegenError(Exception):
    """Base class for all library errors."""


class DomainError(RoegenError, ValueError):
    """An argument lies outside the admissible domain."""


class ModelError(RoegenError, ValueError):
    """A state is inconsistent with the equation of state it is used with."""


class PathError(RoegenError, ValueError):
    """A process path is malformed."""


class SolverError(RoegenError, ArithmeticError):
    """A numerical routine failed to converge."""
