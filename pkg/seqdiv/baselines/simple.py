import numpy as np

from ..core import *

__all__ = ['random_rank', 'relevance_rank', 'dum_rank']


def random_rank(inst: Instance, seed: int = 0) -> Ordering:
    """Shuffle all the items with a generator seeded by `seed`."""
    rng = np.random.default_rng(seed)
    return Ordering(rng.permutation(inst.n))


def relevance_rank(inst: Instance) -> Ordering:
    """
    Items by non-increasing continuation probability, ties to the lowest
    index.

    >>> from seqdiv import build_instance
    >>> relevance_rank(build_instance(np.zeros([3, 3]), [.2, .9, .2]))
    Ordering([1, 0, 2])
    """
    return Ordering(np.argsort(-inst.probs, kind='stable'))


def dum_rank(inst: Instance) -> Ordering:
    """
    Diversity-utility maximization over category coverage.

    Items are scanned by non-increasing probability; those adding at least
    one new category are placed first, in scan order, and the others follow
    in the same order.

    Raises:
        MissingCategories: If the instance has no categories.
    """
    mat = inst.category_matrix
    covered = np.zeros([mat.shape[1]], dtype=np.bool_)
    head, tail = [], []
    for v in relevance_rank(inst):
        if np.any(mat[v] & ~covered):
            head.append(v)
            covered |= mat[v]
        else:
            tail.append(v)
    return Ordering(np.asarray(head + tail, dtype=np.int64))
