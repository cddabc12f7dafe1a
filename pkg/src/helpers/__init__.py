from .settings import Settings, get_settings
from .exceptions import (TorusQuotientError,
                         MatrixParseError,
                         InvalidMoveError,
                         UnknownLabelError,
                         EmptySubsetError,
                         RankDomainError,
                         SubsetLimitError,
                         NonEffectiveActionError,
                         InvariantViolationError)


__all__ = ["Settings",
           "get_settings",
           "TorusQuotientError",
           "MatrixParseError",
           "InvalidMoveError",
           "UnknownLabelError",
           "EmptySubsetError",
           "RankDomainError",
           "SubsetLimitError",
           "NonEffectiveActionError",
           "InvariantViolationError"]
