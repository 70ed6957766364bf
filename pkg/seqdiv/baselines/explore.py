from typing import *

import numpy as np

from ..core import *
from ..typing_ import *
from .config import *

__all__ = ['ExploreSession', 'explore_scores', 'explore_session',
           'explore_rank']


class ExploreSession(NamedTuple):
    """A simulated EXPLORE interaction."""

    lists: Tuple[Tuple[int, ...], ...]
    """The presented recommendation lists, in presentation order."""

    accepted: Tuple[int, ...]
    """The accepted items, in acceptance order."""


def explore_scores(probs: np.ndarray,
                   to_selected: Optional[np.ndarray],
                   alpha: float) -> np.ndarray:
    """
    The EXPLORE score ``(p^-alpha + d^-alpha - 1)^(-1/alpha)`` of each item,
    where ``d`` is the distance to the accepted set.  Without accepted items
    (`to_selected` is None) the score reduces to ``p``.

    >>> explore_scores(np.array([.5, 0.]), None, .5).tolist()
    [0.5, 0.0]
    """
    probs = np.asarray(probs, dtype=np.float64)
    if to_selected is None:
        return probs.copy()
    with np.errstate(divide='ignore'):
        inner = probs ** -alpha + np.asarray(to_selected) ** -alpha - 1.
    # an infinite term (p = 0 or d = 0) drives the score to 0
    return np.where(np.isinf(inner), 0., inner ** (-1. / alpha))


def _simulate(inst: Instance, args: BaselineArgs,
              rng: np.random.Generator) -> ExploreSession:
    n = inst.n
    chosen = np.zeros([n], dtype=np.bool_)
    to_selected = None
    quit_prob = 1. / args.explore_steps
    lists, accepted = [], []

    while not np.all(chosen):
        remaining = np.where(~chosen)[0]
        scores = explore_scores(
            inst.probs[remaining],
            None if to_selected is None else to_selected[remaining],
            args.explore_alpha,
        )
        top = remaining[np.lexsort((remaining, -scores))][:args.explore_k]
        lists.append(tuple(int(i) for i in top))

        if rng.random() < quit_prob:
            break
        weights = inst.probs[top]
        total = float(np.sum(weights))
        if total <= 0.:
            break
        v = int(top[rng.choice(len(top), p=weights / total)])
        accepted.append(v)
        chosen[v] = True
        # distance to the accepted set is that of the nearest accepted item
        to_selected = np.copy(inst.dist[v]) if to_selected is None else \
            np.minimum(to_selected, inst.dist[v])

    return ExploreSession(lists=tuple(lists), accepted=tuple(accepted))


def explore_session(inst: Instance,
                    cfg: Optional[BaselineConfig] = None,
                    **kwargs) -> ExploreSession:
    """
    Simulate an EXPLORE session.

    Each round presents the top `explore_k` unaccepted items by
    :func:`explore_scores`.  The user then quits with probability
    ``1 / explore_steps``, or otherwise accepts one presented item drawn
    with probability proportional to its continuation probability.
    """
    args = validate_baseline_config(cfg, **kwargs)
    return _simulate(inst, args, np.random.default_rng(args.seed))


def explore_rank(inst: Instance,
                 cfg: Optional[BaselineConfig] = None,
                 **kwargs) -> Ordering:
    """
    Turn a simulated EXPLORE session into an ordering.

    With ``accepted_then_random`` the accepted items come first, in
    acceptance order; with ``concatenate_lists`` the presented lists are
    concatenated, keeping the first occurrence of each item.  The rest of
    the items follow in random order, drawn from the session's generator.
    """
    args = validate_baseline_config(cfg, **kwargs)
    rng = np.random.default_rng(args.seed)
    session = _simulate(inst, args, rng)

    if args.explore_adaptation == ExploreAdaptation.ACCEPTED_THEN_RANDOM:
        head = list(session.accepted)
    else:
        head = list(dict.fromkeys(i for lst in session.lists for i in lst))
    rest = np.setdiff1d(np.arange(inst.n), head)
    rest = rng.permutation(rest)
    return Ordering(np.concatenate(
        [np.asarray(head, dtype=np.int64), rest.astype(np.int64)]))
