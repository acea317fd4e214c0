"""Exception types raised across the package.

Every error that callers are expected to handle derives from BroomDistError,
so CLI code can map the whole family onto structured exit codes.
"""


class BroomDistError(Exception):
    """Base class for all broomdist domain errors."""


class InvalidSpecError(BroomDistError):
    """Split graph sizes are out of range (p must be >= 1, q >= 0)."""


class InvalidBroomError(BroomDistError):
    """Base class for broom validation failures."""


class UnknownVertexError(InvalidBroomError):
    """A vertex index falls outside the governing split graph."""


class DuplicateVertexError(InvalidBroomError):
    """A vertex occurs more than once across handle and leaves."""


class MissingPVertexError(InvalidBroomError):
    """A clique vertex is absent from the handle."""


class BadHandleTailError(InvalidBroomError):
    """The handle ends in a tail that no search tree can have."""


class LeafNotInQError(InvalidBroomError):
    """A declared leaf belongs to the clique part."""


class LeafSetMismatchError(InvalidBroomError):
    """Stored leaves disagree with the leaves recomputed from the handle."""


class InstanceFormatError(BroomDistError):
    """An instance document is malformed (unknown fields, bad types)."""


class SpecMismatchError(BroomDistError):
    """The two brooms of an operation live on different split graphs."""


class IllegalRotationError(BroomDistError):
    """A rotation's precondition fails on the given broom."""


class NotAPermutationError(BroomDistError):
    """Input sequence is not a permutation of 1..k."""


class DomainMismatchError(BroomDistError):
    """An assignment's domain differs from the instance's shared vertex set."""


class DuplicateEntryError(BroomDistError):
    """A partial permutation repeats an element."""


class OutOfRangeError(BroomDistError):
    """A partial permutation entry falls outside 1..q."""


class TooLargeError(BroomDistError):
    """An exhaustive computation would exceed the configured cap."""
