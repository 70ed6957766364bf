from enum import Enum
from typing import *

import numpy as np

__all__ = [
    # enums
    'ProbabilityMode', 'ExtensionMode', 'ObjectiveKind', 'ExploreAdaptation',
    'DatasetKind', 'TableFormat', 'RegimeName',

    # value types
    'Score', 'ItemSet', 'OrderingLike', 'ArrayLike', 'CategorySets',
]


# enums
class ProbabilityMode(str, Enum):
    """Which truncated surrogate the best-κ items search maximizes."""

    UNIFORM = 'uniform'
    """All continuation probabilities are equal: maximize ``ell_hat``."""

    NON_UNIFORM = 'non_uniform'
    """Arbitrary continuation probabilities: maximize ``ell_tilde``."""


class ExtensionMode(str, Enum):
    """How a best-κ prefix is extended to a full ordering."""

    GREEDY = 'greedy'
    """Append the item with the largest marginal OSD gain at each step."""

    ARBITRARY = 'arbitrary'
    """Append the remaining items in ascending index order."""


class ObjectiveKind(str, Enum):
    OSD = 'osd'
    OCD = 'ocd'
    OHP = 'ohp'


class ExploreAdaptation(str, Enum):
    """How the EXPLORE recommendation lists are turned into one ordering."""

    ACCEPTED_THEN_RANDOM = 'accepted_then_random'
    """Accepted items in acceptance order, then the rest at random."""

    CONCATENATE_LISTS = 'concatenate_lists'
    """Presented lists concatenated (first occurrence kept), then the rest."""


class DatasetKind(str, Enum):
    REC = 'rec'
    """Recommendation data: ratings + categories, Jaccard distances."""

    IR = 'ir'
    """Retrieval data: per-query relevance + features, cosine distances."""


class TableFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'


class RegimeName(str, Enum):
    SMALL = 'small'
    MEDIUM = 'medium'
    LARGE = 'large'
    FULL = 'full'


# value types
Score = float
"""A non-negative, finite objective or metric value."""

ItemSet = Iterable[int]
ArrayLike = Union[np.ndarray, Sequence[float]]
OrderingLike = Union['Ordering', np.ndarray, Sequence[int]]
CategorySets = Sequence[AbstractSet[Hashable]]


from .core import Ordering
