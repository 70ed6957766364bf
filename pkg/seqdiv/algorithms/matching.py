import warnings
from typing import *

import numpy as np

from ..core import *
from ..errors import *
from ..settings_ import settings
from ..typing_ import *

__all__ = [
    'Matching', 'greedy_matching', 'greedy_matching_rank',
    'matching_properties',
]


class Matching(NamedTuple):
    """
    Vertex-disjoint item pairs, in non-increasing order of their distances.
    """

    edges: Tuple[Tuple[int, int], ...]


def greedy_matching(inst: Instance) -> Matching:
    """
    Scan all pairs ``(u, v)``, ``u < v``, by non-increasing distance (ties in
    lexicographic pair order), keeping each pair whose items are both still
    unmatched, until ``n // 2`` pairs are taken.

    >>> from seqdiv import build_instance
    >>> greedy_matching(build_instance(np.ones([4, 4]) - np.eye(4), [.5] * 4))
    Matching(edges=((0, 1), (2, 3)))
    """
    n = inst.n
    target = n // 2
    rows, cols = np.triu_indices(n, 1)
    order = np.argsort(-inst.dist[rows, cols], kind='stable')

    used = np.zeros([n], dtype=np.bool_)
    edges = []
    for e in order:
        if len(edges) >= target:
            break
        u, v = int(rows[e]), int(cols[e])
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            edges.append((u, v))
    return Matching(edges=tuple(edges))


def greedy_matching_rank(inst: Instance) -> Ordering:
    """
    The greedy matching algorithm.

    The edges of :func:`greedy_matching` occupy positions ``(1, 2)``,
    ``(3, 4)``, ... in order, and the unmatched item (if `n` is odd) comes
    last.  Edges are then oriented from back to front, such that the endpoint
    farther from the next position is placed second.  If `n` is even, the
    last edge ``(u, v)`` is placed as ``(v, u)``.

    The approximation guarantee relies on the triangle inequality; a
    :class:`NonMetricWarning` is emitted for non-metric distances (if
    ``settings.warn_non_metric`` is enabled), but the ordering is still
    produced.

    Raises:
        TooFewItems: If the instance has less than two items.
    """
    n = inst.n
    if n < 2:
        raise TooFewItems(n, 2, 'The greedy matching algorithm')
    if settings.warn_non_metric:
        report = inst.metric_report or check_metric(inst)
        if not report.is_metric:
            warnings.warn(
                f'The distances are not metric (worst violation '
                f'{report.worst_violation:.6g} at {report.violating_triple}): '
                f'the greedy matching guarantee does not hold.',
                NonMetricWarning
            )

    edges = greedy_matching(inst).edges
    kappa = len(edges)
    dist = inst.dist
    perm = np.empty([n], dtype=np.int64)
    if n % 2 == 1:
        matched = {i for e in edges for i in e}
        perm[-1] = next(i for i in range(n) if i not in matched)

    for t in reversed(range(kappa)):
        u, v = edges[t]
        if t == kappa - 1 and n % 2 == 0:
            perm[2 * t], perm[2 * t + 1] = v, u
        else:
            nxt = perm[2 * t + 2]
            if dist[v, nxt] >= dist[u, nxt]:
                perm[2 * t], perm[2 * t + 1] = u, v
            else:
                perm[2 * t], perm[2 * t + 1] = v, u

    return Ordering(perm)


def matching_properties(inst: Instance,
                        ord: OrderingLike,
                        tol: Optional[float] = None) -> Tuple[bool, bool]:
    """
    Check the two structural properties of a greedy matching ordering
    (positions are 1-based):

    1. ``d(pi(2i-1), pi(2i)) >= d(pi(2i+1), pi(2i+2))`` for ``i < n // 2``;
    2. ``d(pi(2i), pi(2i+1)) >= d(pi(2i-1), pi(2i)) / 2`` for every
       ``i <= n // 2`` such that position ``2i + 1`` exists.

    Returns:
        Whether property 1 holds, and whether property 2 holds.
    """
    if tol is None:
        tol = settings.float_tol
    perm = as_ordering(inst, ord).perm
    dist = inst.dist
    n = len(perm)
    pair = dist[perm[0: 2 * (n // 2): 2], perm[1: 2 * (n // 2): 2]]
    p1 = bool(np.all(pair[:-1] >= pair[1:] - tol))
    link = dist[perm[1: n - 1: 2], perm[2: n: 2]]
    p2 = bool(np.all(link >= 0.5 * pair[:len(link)] - tol))
    return p1, p2
