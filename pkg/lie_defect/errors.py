class LieDefectError(Exception):
    pass


class ConfigurationError(LieDefectError, ValueError):
    """Invalid group spec, rank outside its range or unusable command line."""


class UnsupportedGroupError(ConfigurationError):
    pass


class DomainError(LieDefectError, ValueError):
    """Input outside the domain of an operation (zero polynomial, bad partition, ...)."""


class DataMissingError(LieDefectError, LookupError):
    """A table that the computation depends on was never loaded."""


class InvalidRecordError(LieDefectError, ValueError):
    def __init__(self, index, reason):
        super().__init__("record " + str(index) + ": " + reason)
        self.index = index
        self.reason = reason


class InvariantViolation(LieDefectError, AssertionError):
    """An internal identity failed. Seeing this means a bug, not bad input."""
