"""Exception taxonomy.

Every error raised by this package derives from IsotreeError, so callers
(including the CLI) can distinguish domain-level failures from bugs.
"""


class IsotreeError(Exception):
    """Base class for all errors raised by isotree."""


class NotATree(IsotreeError):
    """Edge data does not describe a tree (wrong count, cycle, loop, ...)."""


class BadParameter(IsotreeError):
    """A numeric argument is outside its documented range."""


class FormatError(IsotreeError):
    """A text file does not conform to its format; message carries the line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegreeExceedsAmbient(IsotreeError):
    """A tree vertex has degree larger than the ambient degree d."""


class SingletonDomain(IsotreeError):
    """Operation undefined for one-vertex domains."""


class DomainTooSmall(IsotreeError):
    """Operation requires a larger domain (the 7-way checker needs >= 3)."""


class NotALeaf(IsotreeError):
    """The given vertex is not a leaf of the domain."""


# stem diagram validation

class TreeTooSmall(IsotreeError):
    """The underlying tree has too few vertices."""


class DegenerateColoring(IsotreeError):
    """Leaf-blue coloring of the tree has no red vertex to support it."""


class BlueBlueEdge(IsotreeError):
    """Two blue vertices are adjacent."""


class RedLeaf(IsotreeError):
    """A leaf of the diagram is red."""


class RedDegreeOutOfRange(IsotreeError):
    """A red vertex violates the 2 <= degree <= d-1 bound."""


class NotARedRedEdge(IsotreeError):
    """The given edge is not an existing red-red edge."""


# gluing

class TooFewParts(IsotreeError):
    """Gluing needs at least two parts."""


class TooManyParts(IsotreeError):
    """Gluing admits at most d parts."""


class DegreeOverflow(IsotreeError):
    """The glued vertex would exceed degree d."""


class MarkedVertexNotBoundary(IsotreeError):
    """A marked gluing vertex is not a boundary vertex of its part."""


# reconstruction data

class InvalidStem(IsotreeError):
    """The datum's stem diagram is invalid for the given ambient degree."""


class NotFull(IsotreeError):
    """Part i of a reconstruction datum is not a full domain."""

    def __init__(self, index, message=None):
        super().__init__(message or f"part {index} is not a full domain")
        self.index = index


class BoundaryTooSmall(IsotreeError):
    """Part i has fewer boundary vertices than its blue vertex has neighbors."""

    def __init__(self, index, message=None):
        super().__init__(message or f"part {index}: boundary smaller than blue degree")
        self.index = index


class GlueMapNotInjective(IsotreeError):
    """The gluing map of part i maps two red vertices to the same leaf."""

    def __init__(self, index, message=None):
        super().__init__(message or f"part {index}: gluing map is not injective")
        self.index = index


class GlueImageNotBoundary(IsotreeError):
    """The gluing map of part i sends a red vertex outside the part boundary."""

    def __init__(self, index, message=None):
        super().__init__(message or f"part {index}: gluing image is not a boundary vertex")
        self.index = index


class DegenerateGluing(IsotreeError):
    """Part i would be consumed entirely by gluing (no vertex left outside
    the glued leaves), which breaks the stem of the reconstructed domain."""

    def __init__(self, index, message=None):
        super().__init__(message or f"part {index}: every vertex is glued away")
        self.index = index
