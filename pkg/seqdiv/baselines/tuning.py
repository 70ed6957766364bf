from typing import *

import numpy as np

from ..arg_check import *
from ..core import *
from ..errors import *
from ..objective import osd
from ..typing_ import *
from .config import *
from .dpp import dpp_rank
from .explore import explore_rank
from .greedy_rerank import mmr_rank, msd_rank

__all__ = [
    'LAMBDA_RANKERS', 'DEFAULT_LAMBDA_GRID', 'LambdaTuning', 'ExploreTuning',
    'tune_lambda', 'tune_explore',
]

LAMBDA_RANKERS: Dict[str, Callable[..., Ordering]] = {
    'mmr': mmr_rank,
    'msd': msd_rank,
    'dpp': dpp_rank,
}
"""The baselines with a relevance / diversity trade-off `lambda_`."""

DEFAULT_LAMBDA_GRID: Tuple[float, ...] = tuple(
    round(0.1 * i, 1) for i in range(11))


class LambdaTuning(NamedTuple):
    best_lambda: float
    scores: Tuple[Tuple[float, float], ...]
    """``(lambda, mean osd)`` of each grid point, in grid order."""


class ExploreTuning(NamedTuple):
    best: Tuple[int, int, ExploreAdaptation]
    """The best ``(explore_k, explore_steps, explore_adaptation)``."""

    scores: Tuple[Tuple[Tuple[int, int, ExploreAdaptation], float], ...]


def _resolve_ranker(method: Union[str, Callable[..., Ordering]]
                    ) -> Callable[..., Ordering]:
    if callable(method):
        return method
    name = str(method).lower()
    if name not in LAMBDA_RANKERS:
        raise ConfigValidationError(
            f'`method` must be one of {", ".join(LAMBDA_RANKERS)}: '
            f'got {method!r}')
    return LAMBDA_RANKERS[name]


def _mean_osd(instances: Sequence[Instance],
              rank_fn: Callable[[Instance], Ordering]) -> float:
    return float(np.mean([osd(inst, rank_fn(inst)) for inst in instances]))


def tune_lambda(instances: Sequence[Instance],
                method: Union[str, Callable[..., Ordering]],
                grid: Optional[Sequence[float]] = None,
                cfg: Optional[BaselineConfig] = None) -> LambdaTuning:
    """
    Grid search of `lambda_` for a trade-off baseline, maximizing the mean
    OSD over `instances`.  Ties go to the smaller `lambda_`.

    Args:
        instances: The instances (e.g., one per user).
        method: ``'mmr'``, ``'msd'``, ``'dpp'``, or a ranker accepting
            ``(inst, cfg, lambda_=...)``.
        grid: The candidate values, default ``0.0, 0.1, ..., 1.0``.
        cfg: The other baseline settings.
    """
    rank = _resolve_ranker(method)
    grid = DEFAULT_LAMBDA_GRID if grid is None else tuple(grid)
    if not grid:
        raise ConfigValidationError('`grid` must not be empty.')
    if not instances:
        raise ConfigValidationError('`instances` must not be empty.')

    scores = []
    for lam in grid:
        lam = validate_unit_interval('lambda_', lam)
        scores.append((lam, _mean_osd(
            instances, lambda inst: rank(inst, cfg, lambda_=lam))))

    top = max(s for _, s in scores)
    best = min(lam for lam, s in scores if s == top)
    return LambdaTuning(best_lambda=best, scores=tuple(scores))


def tune_explore(instances: Sequence[Instance],
                 grid: Sequence[Tuple[int, int, Union[str, ExploreAdaptation]]],
                 cfg: Optional[BaselineConfig] = None) -> ExploreTuning:
    """
    Sweep ``(explore_k, explore_steps, explore_adaptation)`` of EXPLORE,
    maximizing the mean OSD over `instances`.  Ties go to the first grid
    point.
    """
    if not grid:
        raise ConfigValidationError('`grid` must not be empty.')
    if not instances:
        raise ConfigValidationError('`instances` must not be empty.')

    scores = []
    for k, steps, adaptation in grid:
        point = (validate_positive_int('explore_k', k),
                 validate_positive_int('explore_steps', steps),
                 validate_enum('explore_adaptation', adaptation,
                               ExploreAdaptation))
        scores.append((point, _mean_osd(
            instances,
            lambda inst: explore_rank(
                inst, cfg, explore_k=point[0], explore_steps=point[1],
                explore_adaptation=point[2])
        )))

    top = max(s for _, s in scores)
    best = next(point for point, s in scores if s == top)
    return ExploreTuning(best=best, scores=tuple(scores))
