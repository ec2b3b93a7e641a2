"""Exception types shared across the package."""


class HitschedError(Exception):
    """Base class for all package errors."""


class BadParameter(HitschedError, ValueError):
    """A caller-supplied parameter is out of range or inconsistent."""


class TimestepUnderflow(HitschedError):
    """A commensurate block step would need a level below the finest allowed."""


class SingularEncounter(HitschedError):
    """Two unsoftened particles coincide; the pairwise force is undefined."""


class SchedulerError(HitschedError):
    """Base class for scheduler contract violations."""


class EmptySystem(SchedulerError):
    """The scheduler holds (or would hold) no particles."""


class DuplicateId(SchedulerError):
    """A particle id appears more than once."""


class NotActive(SchedulerError):
    """An update names a particle that is not in the current active set."""


class NonMonotonicTime(SchedulerError):
    """A new active time does not lie strictly after the current minimum."""


class IncompleteCommit(SchedulerError):
    """A commit is missing one or more currently active particles."""
