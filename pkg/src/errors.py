"""
Exception hierarchy for tracklab.
Every library failure derives from TrackLabError so the CLI can map it to an exit code.
"""


class TrackLabError(Exception):
    """Base class for all tracklab errors."""


# Triangulations

class TriangulationError(TrackLabError):
    """A face list does not describe a simplicial 2-sphere."""


class NotSimplicial(TriangulationError):
    """Degenerate or repeated face."""


class NotClosed(TriangulationError):
    """Some edge does not lie in exactly two faces."""


class NotConnected(TriangulationError):
    """The complex falls apart, or a vertex id is never used."""


class NotASphere(TriangulationError):
    """Euler characteristic is not 2 or a vertex link is not a single cycle."""


class InvalidSpec(TriangulationError):
    """Unknown generator kind or bad size."""


class UnknownVertex(TriangulationError):
    pass


class UnknownEdge(TriangulationError):
    pass


# Patterns

class PatternError(TrackLabError):
    """Problems with edge-weight vectors."""


class InvalidPattern(PatternError):
    """Matching conditions fail on at least one face."""


class MismatchedTriangulation(PatternError):
    """Two values were built on different triangulations."""


# Curves

class CurveError(TrackLabError):
    """Problems with embedded curve systems."""


class NotNormal(CurveError):
    """The system still has returning arcs."""


class NotEmbedded(CurveError):
    """Chords cross, or a crossing does not have one chord per face."""


class UnsupportedTriangulation(CurveError):
    """The operation is only defined on the boundary of a tetrahedron."""


# Rewriting

class RewriteError(TrackLabError):
    """A rewrite step was requested on an unsuitable chord or crossing."""


class NotReturning(RewriteError):
    pass


class NotInnermost(RewriteError):
    pass


class NoAdjacentPair(RewriteError):
    pass


# Dual tree

class TreeError(TrackLabError):
    """Problems building or querying D_P."""


class NotATree(TreeError):
    """A track failed to separate; cannot happen on a 2-sphere."""


class UnknownRegion(TreeError):
    pass


class ParallelTracksPresent(TreeError):
    """Two tracks of the pattern have equal weight vectors."""


# Builder

class BuilderError(TrackLabError):
    """Problems completing a pattern to a maximal one."""


class InternalNoProgress(BuilderError):
    """A region fails the profile check but no surgery yields a new track."""


class BoundTooLarge(BuilderError):
    """Oracle search space exceeds the configured cap."""


# Files

class FileFormatError(TrackLabError):
    """An input file is missing, unreadable or does not match its schema."""
