from typing import *

import numpy as np

from ..errors import *
from ..typing_ import *

__all__ = ['exp_dcg', 'exp_serendipity', 'exp_num', 'novelty_flags']


def _expected_gain(probs: np.ndarray, gains: np.ndarray) -> float:
    # sum_j (sum_{t<=j} gains_t) * (1 - p_{j+1}) * prod_{t<=j} p_t,
    # with p_{n+1} := 0
    if len(probs) == 0:
        return 0.
    next_p = np.concatenate([probs[1:], [0.]])
    return float(np.sum(np.cumsum(gains) * (1. - next_p) * np.cumprod(probs)))


def _as_probs(probs_in_order) -> np.ndarray:
    return np.asarray(probs_in_order, dtype=np.float64).reshape([-1])


def exp_dcg(probs_in_order: ArrayLike) -> Score:
    """
    Expected DCG of a ranking: the relevance ``p_t`` of position ``t`` is
    discounted by ``log2(t + 1)`` and accumulated over the accepted prefix.

    >>> exp_dcg([0.5])
    0.25
    """
    probs = _as_probs(probs_in_order)
    discount = np.log2(np.arange(2, len(probs) + 2))
    return _expected_gain(probs, probs / discount)


def exp_serendipity(probs_in_order: ArrayLike,
                    novelty: Sequence[bool]) -> Score:
    """
    Expected serendipity of a ranking: ``p_t * I(t, u)`` accumulated over the
    accepted prefix, where ``I(t, u)`` flags whether item ``t`` adds a category
    beyond the user's history (see :func:`novelty_flags`).

    Raises:
        DimensionMismatch: If `novelty` and `probs_in_order` differ in length.
    """
    probs = _as_probs(probs_in_order)
    flags = np.asarray(novelty, dtype=np.float64).reshape([-1])
    if flags.shape != probs.shape:
        raise DimensionMismatch(
            f'`novelty` must have the same length as `probs_in_order`: '
            f'{len(flags)} vs {len(probs)}')
    return _expected_gain(probs, probs * flags)


def exp_num(probs_in_order: ArrayLike) -> Score:
    """
    The expected number of accepted items, ``sum(prod(p_t for t <= k))``.

    >>> exp_num([0.5, 0.5])
    0.75
    """
    return float(np.sum(np.cumprod(_as_probs(probs_in_order))))


def novelty_flags(item_categories: Sequence[AbstractSet[Hashable]],
                  history_categories: AbstractSet[Hashable]) -> np.ndarray:
    """
    ``I(t, u)`` of each item: whether its categories are not all covered by
    the categories of the user's rated history.
    """
    return np.asarray([bool(set(c) - set(history_categories))
                       for c in item_categories], dtype=np.bool_)
