from typing import *

import numpy as np

from ..core import Instance
from ..errors import *
from ..typing_ import *

__all__ = ['div_sum', 'div_cov', 'coverage_counts']


def _as_index_array(items: ItemSet) -> np.ndarray:
    if isinstance(items, np.ndarray):
        return items.astype(np.int64, copy=False).reshape([-1])
    return np.fromiter(items, dtype=np.int64)


def div_sum(inst: Instance, items: ItemSet) -> Score:
    """
    Sum-of-distances diversity: ``sum(d(i, j))`` over the unordered pairs
    ``{i, j}`` of `items`.  Each pair is counted once.

    >>> from seqdiv import build_instance
    >>> inst = build_instance([[0, .3, 1], [.3, 0, 1], [1, 1, 0]], [1, 1, 0])
    >>> round(div_sum(inst, [0, 1]), 12), round(div_sum(inst, [0, 1, 2]), 12)
    (0.3, 2.3)
    """
    idx = np.unique(_as_index_array(items))
    if len(idx) < 2:
        return 0.
    sub = inst.dist[np.ix_(idx, idx)]
    return float(np.sum(np.triu(sub, 1)))


def div_cov(inst: Instance, items: ItemSet) -> Score:
    """
    Coverage diversity: the number of distinct categories covered by `items`.

    Raises:
        MissingCategories: If `inst` has no categories.
    """
    mat = inst.category_matrix
    idx = np.unique(_as_index_array(items))
    if len(idx) == 0:
        return 0.
    return float(np.count_nonzero(np.any(mat[idx], axis=0)))


def coverage_counts(inst: Instance, perm: np.ndarray) -> np.ndarray:
    """
    ``ret[k]`` is the number of categories covered by the first `k` items
    of `perm`, for ``k = 0 .. len(perm)``.
    """
    mat = inst.category_matrix
    ret = np.zeros([len(perm) + 1], dtype=np.float64)
    if len(perm) and mat.shape[1]:
        covered = np.logical_or.accumulate(mat[perm], axis=0)
        ret[1:] = np.count_nonzero(covered, axis=1)
    return ret
