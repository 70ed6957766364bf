from typing import *

__all__ = [
    # base classes
    'SeqDivError',

    # instance errors
    'DimensionMismatch', 'AsymmetricDistance', 'NonzeroDiagonal',
    'NegativeDistance', 'ProbabilityOutOfRange', 'InvalidOrdering',
    'MissingCategories', 'TooFewItems',

    # algorithm errors
    'DegenerateProbability', 'KappaOutOfRange', 'NonUniformProbsInUniformMode',
    'KernelBreakdown', 'InstanceTooLarge',

    # data errors
    'ParseError', 'DuplicateRating', 'EmptyTable', 'DegenerateRange',
    'EmptyCategorySet', 'ZeroNormVector',

    # runner errors
    'ConfigValidationError', 'UserContextError',

    # warnings
    'NonMetricWarning', 'KernelJitterWarning',
]


class SeqDivError(Exception):
    """Base class of all errors raised by seqdiv."""


class DimensionMismatch(SeqDivError, ValueError):
    pass


class _IndexedError(SeqDivError, ValueError):
    """Base class of errors which are caused by one specific item."""

    index: int

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = int(index)


class AsymmetricDistance(_IndexedError):

    other: int

    def __init__(self, index: int, other: int, message: str):
        super().__init__(index, message)
        self.other = int(other)


class NonzeroDiagonal(_IndexedError):
    pass


class NegativeDistance(_IndexedError):
    pass


class ProbabilityOutOfRange(_IndexedError):
    pass


class InvalidOrdering(SeqDivError, ValueError):
    pass


class MissingCategories(SeqDivError, ValueError):

    def __init__(self, message: str = '`categories` of the instance is '
                                      'required, but it is not present.'):
        super().__init__(message)


class TooFewItems(SeqDivError, ValueError):

    n: int
    minimum: int

    def __init__(self, n: int, minimum: int = 2, what: str = 'the operation'):
        super().__init__(f'{what} requires at least {minimum} items: '
                         f'got {n} item(s).')
        self.n = int(n)
        self.minimum = int(minimum)


class DegenerateProbability(SeqDivError, ValueError):
    pass


class KappaOutOfRange(SeqDivError, ValueError):
    pass


class NonUniformProbsInUniformMode(SeqDivError, ValueError):
    pass


class KernelBreakdown(SeqDivError, ArithmeticError):
    pass


class InstanceTooLarge(SeqDivError, ValueError):

    n: int

    def __init__(self, n: int, max_n: int):
        super().__init__(f'The exhaustive oracle supports at most {max_n} '
                         f'items: got {n} items.')
        self.n = int(n)


class ParseError(SeqDivError, ValueError):

    line: int

    def __init__(self, line: int, message: str):
        super().__init__(f'line {line}: {message}')
        self.line = int(line)


class DuplicateRating(SeqDivError, ValueError):

    user: Any
    item: Any

    def __init__(self, user, item, line: Optional[int] = None):
        msg = f'Duplicated rating for user {user!r} and item {item!r}'
        if line is not None:
            msg += f' at line {line}'
        super().__init__(msg + '.')
        self.user = user
        self.item = item


class EmptyTable(SeqDivError, ValueError):
    pass


class DegenerateRange(SeqDivError, ValueError):
    pass


class EmptyCategorySet(_IndexedError):
    pass


class ZeroNormVector(_IndexedError):
    pass


class ConfigValidationError(SeqDivError, ValueError):
    pass


class UserContextError(SeqDivError):
    """Wraps an error raised while processing the instance of one user."""

    user: Any
    cause_type: str
    cause_message: str

    def __init__(self,
                 user,
                 cause: Union[BaseException, str],
                 cause_type: Optional[str] = None):
        if isinstance(cause, BaseException):
            cause_type = type(cause).__name__
            cause = str(cause)
        self.user = user
        self.cause_type = cause_type or 'Exception'
        self.cause_message = cause
        super().__init__(f'Error while processing user {user!r}: '
                         f'{self.cause_type}: {cause}')

    def __reduce__(self):
        # rebuilt from plain values, so it survives worker processes
        return UserContextError, (self.user, self.cause_message,
                                  self.cause_type)


class NonMetricWarning(UserWarning):
    """The distance matrix violates the triangle inequality."""


class KernelJitterWarning(UserWarning):
    """The DPP kernel has been regularized by a diagonal jitter."""
