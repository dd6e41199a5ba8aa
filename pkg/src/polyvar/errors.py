"""Exception and warning types shared across the package."""


class CurveError(Exception):
    """Base class for all polyvar errors."""


class TooFewVertices(CurveError):
    pass


class ZeroEdge(CurveError):
    def __init__(self, k):
        super().__init__(f"edge {k} has zero length")
        self.k = k


class InvalidWinding(CurveError):
    pass


class OpenCurve(CurveError):
    pass


class CuspVertex(CurveError):
    def __init__(self, k):
        super().__init__(f"vertex {k} is a cusp (turning angle = pi)")
        self.k = k


class CuspAdjacent(CurveError):
    def __init__(self, k):
        super().__init__(f"edge {k} has a cusp endpoint")
        self.k = k


class CuspPresent(CurveError):
    pass


class NonIntegerTurning(CurveError):
    pass


class SchemeInapplicable(CurveError):
    pass


class KappaZero(CurveError):
    pass


class MeanNotZero(CurveError):
    pass


class NotEquilibrium(CurveError):
    pass


class InternalInconsistency(CurveError):
    pass


class EdgeCollapse(CurveError):
    def __init__(self, k):
        super().__init__(f"offset collapses edge {k}")
        self.k = k


class ZeroVolumeGradient(CurveError):
    pass


class CuspWarning(UserWarning):
    """Emitted when a turning angle equals +/-pi within tolerance."""
