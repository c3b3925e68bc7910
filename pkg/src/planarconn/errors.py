"""Exception hierarchy shared by every oracle in the package."""


class PlanarConnError(Exception):
    """Base class for all package errors."""


class MalformedRotation(PlanarConnError):
    pass


class Disconnected(PlanarConnError):
    pass


class EulerViolation(PlanarConnError):
    pass


class CotreeNotSpanning(PlanarConnError):
    pass


class UnknownEdge(PlanarConnError, KeyError):
    pass


class UnknownVertex(PlanarConnError, KeyError):
    pass


class UnknownElement(PlanarConnError, KeyError):
    pass


class NotTriconnected(PlanarConnError):
    pass


class NotBiconnected(PlanarConnError):
    pass


class FailedEndpoint(PlanarConnError):
    """A query named a vertex that is currently failed."""


class AlreadyFailed(PlanarConnError):
    pass


class LabelMismatch(PlanarConnError):
    pass


class IndexOutOfRange(PlanarConnError, IndexError):
    pass


class BadParams(PlanarConnError, ValueError):
    pass


class GraphFormatError(PlanarConnError, ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno
