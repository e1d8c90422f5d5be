"""Exception hierarchy.  Every class name doubles as the error name the CLI reports."""


class KMBranchError(Exception):
    """Base class for domain errors."""


class NotGCM(KMBranchError):
    pass


class NotAffine(KMBranchError):
    pass


class IndexOutOfRange(KMBranchError, IndexError):
    pass


class NotCoprime(KMBranchError):
    pass


class NonPositive(KMBranchError):
    pass


class NotInTitsCone(KMBranchError):
    pass


class NotStrictlyDominant(KMBranchError):
    pass


class NotDominantIntegral(KMBranchError):
    pass


class NotDominant(KMBranchError):
    pass


class LevelMismatch(KMBranchError):
    pass


class TwistedUnsupported(KMBranchError):
    pass


class CutoffUnstable(KMBranchError):
    pass


class DominantInput(KMBranchError):
    pass


class PartnerUnavailable(KMBranchError):
    """No dotted simple root reaches the value -1 along the path."""


class InconsistentTruncation(KMBranchError):
    pass


class IoFailure(KMBranchError):
    pass
