"""Exception types shared by all modules."""


class PerczipError(Exception):
    """Base class for all library errors."""


class MisalignedBoundary(PerczipError):
    """Domain shape does not lie on the requested lattice."""


class NoLatticePath(PerczipError):
    """No lattice path connects a to b inside the domain."""


class WrongLatticeKind(PerczipError):
    """Operation applied to a domain of the wrong lattice kind."""


class EpsOutOfRange(PerczipError):
    """Row-shift parameter outside (-w/2, w/2)."""


class ConfigInvalid(PerczipError):
    """Configuration (run config or percolation config) fails validation."""


class InvalidPrefix(PerczipError):
    """Path prefix violates the preconditions of a classification."""


class ConditioningDegenerate(PerczipError):
    """Sequential conditioning hit a state with no admissible continuation."""


class PathLeavesHalfPlane(PerczipError):
    """Input curve exits the closed upper half-plane during zipping."""


class DegenerateEdge(PerczipError):
    """Edge collapses to zero length after mapping."""


class SwallowedPoint(PerczipError):
    """A tracked boundary preimage crossed a slit base (crossing path)."""


class MissingPreimage(PerczipError):
    """Requested preimage pair was not evolved to the query time."""


class EmptyHull(PerczipError):
    """Hull operations require a nonempty point set."""


class EtaTooSmall(PerczipError):
    """Stopping-schedule threshold must exceed the mesh scale."""


class EtaOutOfRange(PerczipError):
    """Crossing-probability cross-ratio must lie in (0, 1)."""


class EmptyCurve(PerczipError):
    """Curve metric requires nonempty polylines."""


class InsufficientSamples(PerczipError):
    """Statistical operation received fewer samples than its contract allows."""


class InsufficientTail(PerczipError):
    """Tail fit does not have enough exceedances."""


class IoError(PerczipError):
    """File input/output failure with operation context."""
