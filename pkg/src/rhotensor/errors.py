"""Exception hierarchy shared by every module."""


class RhoTensorError(Exception):
    """Base class for all library errors."""


class InvalidSpec(RhoTensorError, ValueError):
    """Unknown family or rank outside the supported range."""


class NonDominantInput(RhoTensorError, ValueError):
    pass


class PreconditionViolated(RhoTensorError, ValueError):
    pass


class ResourceLimit(RhoTensorError):
    """A configured cap (lattice points, rank, heavy types) would be exceeded."""


class InternalConsistencyError(RhoTensorError, AssertionError):
    """Two computations that must agree did not; always a bug."""
