"""Exception hierarchy shared by every orthoglide module."""


class OrthoglideError(Exception):
    """Base class for all errors raised by this package."""


class OutOfReachError(OrthoglideError):
    """A leg cannot reach the requested point (link shorter than needed)."""

    def __init__(self, message, leg=None, point=None):
        super().__init__(message)
        self.leg = leg
        self.point = point


class JointLimitError(OrthoglideError):
    """A linear joint would leave its stroke [rho_min, rho_max]."""

    def __init__(self, message, leg=None, rho=None):
        super().__init__(message)
        self.leg = leg
        self.rho = rho


class NoSolutionError(OrthoglideError):
    """The three leg spheres have no common point."""


class DegenerateError(OrthoglideError):
    """The forward kinematics linear system is singular."""


class SerialSingularError(OrthoglideError):
    """A link is perpendicular to its actuated axis; J^-1 does not exist."""


class DomainError(OrthoglideError, ValueError):
    """An argument lies outside the domain of a closed-form expression."""


class DegenerateRequirementError(OrthoglideError, ValueError):
    """Design requirements that collapse the workspace to a single point."""


class UnsupportedRangeError(OrthoglideError, ValueError):
    """Design requirements outside the range the synthesis supports."""


class EmptyLocusError(OrthoglideError):
    """No singular point was found in the sampled region."""


class BoundViolationError(OrthoglideError):
    """Transmission factors leave their bounds inside the prescribed cube.

    The full :class:`~orthoglide.synthesis.ExtremalityReport` is attached
    as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
