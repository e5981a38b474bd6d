"""Exception types shared across the library."""


class RnsError(ValueError):
    """Base class for all errors raised by this package."""


class ParameterError(RnsError):
    """A structural parameter is invalid (size 0, width mismatch, bad op)."""


class OutOfRangeError(RnsError):
    """An input integer lies outside the representable range [0, M)."""


class ResidueError(RnsError):
    """A residue lies outside its channel range [0, m_i)."""
