from typing import *

import numpy as np

from ..core import *
from .config import *

__all__ = ['mmr_rank', 'msd_rank']


def mmr_rank(inst: Instance,
             cfg: Optional[BaselineConfig] = None,
             **kwargs) -> Ordering:
    """
    Maximal marginal relevance: repeatedly select the item maximizing
    ``lambda * p_i - (1 - lambda) * max(1 - d(i, j) for j in R)``, where
    ``R`` is the selected items.  The maximum over an empty ``R`` is 0.
    Ties go to the lowest index.
    """
    lam = validate_baseline_config(cfg, **kwargs).lambda_
    n = inst.n
    sim = 1. - inst.dist
    penalty = np.zeros([n])
    chosen = np.zeros([n], dtype=np.bool_)
    ret = []
    for _ in range(n):
        remaining = np.where(~chosen)[0]
        scores = lam * inst.probs[remaining] - (1. - lam) * penalty[remaining]
        v = int(remaining[int(np.argmax(scores))])
        penalty = sim[v] if not ret else np.maximum(penalty, sim[v])
        ret.append(v)
        chosen[v] = True
    return Ordering(np.asarray(ret, dtype=np.int64))


def msd_rank(inst: Instance,
             cfg: Optional[BaselineConfig] = None,
             **kwargs) -> Ordering:
    """
    Max-sum diversification: repeatedly select the item maximizing
    ``p_i + lambda * sum(d(i, j) for j in R)``, ties to the lowest index.
    """
    lam = validate_baseline_config(cfg, **kwargs).lambda_
    n = inst.n
    to_selected = np.zeros([n])
    chosen = np.zeros([n], dtype=np.bool_)
    ret = []
    for _ in range(n):
        remaining = np.where(~chosen)[0]
        scores = inst.probs[remaining] + lam * to_selected[remaining]
        v = int(remaining[int(np.argmax(scores))])
        to_selected += inst.dist[v]
        ret.append(v)
        chosen[v] = True
    return Ordering(np.asarray(ret, dtype=np.int64))
