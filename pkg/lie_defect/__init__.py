from .errors import LieDefectError, ConfigurationError, DomainError, DataMissingError, InvalidRecordError, \
    InvariantViolation
from .rootsys import GroupSpec


__version__ = "0.1"
