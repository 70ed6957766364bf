from typing import *

import numpy as np

from ..core import *
from ..objective.sequential import distance_to_prefix
from ..settings_ import settings
from ..typing_ import *

__all__ = ['McEstimate', 'simulate_accepted_lengths', 'monte_carlo_osd']


class McEstimate(NamedTuple):
    mean: float
    stderr: float
    samples: int
    seed: int


def simulate_accepted_lengths(inst: Instance,
                              ord: OrderingLike,
                              samples: int,
                              seed: int = 0) -> np.ndarray:
    """
    Simulate `samples` user sessions along `ord`: the user examines the
    items in order, accepting each one with its continuation probability,
    and stops at the first rejection.

    Returns:
        The number of accepted items of each session.
    """
    perm = as_prefix(inst, ord)
    probs = inst.probs[perm]
    rng = np.random.default_rng(seed)
    chunk = max(1, settings.brute_force_chunk_size // max(1, len(perm)))
    ret = []
    for start in range(0, samples, chunk):
        size = min(chunk, samples - start)
        accept = rng.random([size, len(perm)]) < probs
        ret.append(np.sum(np.cumprod(accept, axis=1), axis=1))
    return np.concatenate(ret) if ret else np.zeros([0], dtype=np.int64)


def monte_carlo_osd(inst: Instance,
                    ord: OrderingLike,
                    samples: int,
                    seed: int = 0) -> McEstimate:
    """
    Estimate the OSD of `ord` by simulating user sessions, averaging the sum
    diversity of the accepted prefixes.

    Raises:
        ValueError: If `samples` is not positive.
    """
    samples = int(samples)
    if samples < 1:
        raise ValueError(f'`samples` must be at least 1: got {samples!r}')
    perm = as_prefix(inst, ord)
    # prefix_div[k] = div_sum of the first k items
    prefix_div = np.concatenate(
        [[0.], np.cumsum(distance_to_prefix(inst, perm))])
    values = prefix_div[simulate_accepted_lengths(inst, perm, samples, seed)]
    stderr = float(np.std(values, ddof=1) / np.sqrt(samples)) \
        if samples > 1 else 0.
    return McEstimate(mean=float(np.mean(values)), stderr=stderr,
                      samples=samples, seed=int(seed))
