"""Exception hierarchy shared by all solvers."""


class TripackError(Exception):
    """Base class for every error raised by this package."""


class FormatError(TripackError):
    """An input file does not follow its documented format."""


class InvalidModel(TripackError):
    """A certificate model violates its invariants."""


class InstanceTooLarge(TripackError):
    """An exact exponential solver was asked to run beyond its size bound."""


class InvalidMatching(TripackError):
    pass


class NotAThresholdPacking(TripackError):
    pass


class MalformedPacking(TripackError):
    pass


class MalformedSequence(TripackError):
    pass


class InvalidTree(TripackError):
    pass


class InvalidCertificate(TripackError):
    pass
