import numpy as np
from heapdict import heapdict

from ..core import *
from ..errors import *
from ..typing_ import *
from .best_k import greedy_extend, search_best_prefix

__all__ = ['greedy_rank', 'coverage_greedy_rank']


def greedy_rank(inst: Instance) -> Ordering:
    """
    The greedy algorithm for sequential sum diversity.

    The first two items maximize ``p_i * p_j * d(i, j)``; each following item
    maximizes the marginal OSD gain of appending it.

    Raises:
        TooFewItems: If the instance has less than two items.
    """
    if inst.n < 2:
        raise TooFewItems(inst.n, 2, 'The greedy algorithm')
    seed, _ = search_best_prefix(inst, 2, ProbabilityMode.NON_UNIFORM)
    return greedy_extend(inst, seed)


def coverage_greedy_rank(inst: Instance) -> Ordering:
    """
    Position-by-position greedy for sequential coverage diversity: append
    the item maximizing ``ocd(O_t || v) - ocd(O_t)``, ties to the lowest index.

    The gains are evaluated lazily.  A gain can only shrink as the prefix
    grows, so a stale gain is an upper bound, and the popped item is taken
    as soon as its refreshed gain still beats every other stale bound.

    Raises:
        MissingCategories: If the instance has no categories.
    """
    mat = inst.category_matrix
    probs = inst.probs
    n = inst.n
    covered = np.zeros([mat.shape[1]], dtype=np.bool_)
    last = 1.

    def gain(v: int) -> float:
        return last * float(probs[v]) * int(np.count_nonzero(mat[v] & ~covered))

    # priorities are ``(-gain, index)``, so the smallest one is the best
    queue = heapdict()
    for v in range(n):
        queue[v] = (-gain(v), v)

    ret = []
    while queue:
        v, _ = queue.popitem()
        fresh = (-gain(v), v)
        if queue and fresh > queue.peekitem()[1]:
            queue[v] = fresh
            continue
        ret.append(v)
        covered |= mat[v]
        last *= float(probs[v])

    return Ordering(np.asarray(ret, dtype=np.int64))
