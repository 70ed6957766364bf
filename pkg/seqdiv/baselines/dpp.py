import math
import warnings
from typing import *

import numpy as np

from ..core import *
from ..errors import *
from ..settings_ import settings
from .config import *

__all__ = ['DppTrace', 'IncrementalCholesky', 'dpp_kernel', 'dpp_rank',
           'dpp_trace']

_PIVOT_TOL = 1e-10


class DppTrace(NamedTuple):
    ordering: Ordering
    """The DPP ordering."""

    logdets: np.ndarray
    """``logdets[k] = log det(S[O_{k+1}, O_{k+1}])``, for ``k = 0 .. n-1``."""

    jitter: float
    """The diagonal jitter added to the kernel, 0 if none was needed."""


class IncrementalCholesky(object):
    """
    Rank-one updated Cholesky factor of ``S[R, R]`` for a growing selection
    ``R``.  `residuals` holds, for every item ``i``, the squared pivot it
    would get if it were selected next, i.e.,
    ``det(S[R + i, R + i]) / det(S[R, R])``.
    """

    def __init__(self, kernel: np.ndarray):
        n = kernel.shape[0]
        self.kernel = kernel
        self.residuals = np.copy(np.diag(kernel)).astype(np.float64)
        self._factors = np.zeros([n, n])
        self._size = 0

    def select(self, item: int) -> float:
        """Select `item`, and return its squared pivot."""
        pivot = float(self.residuals[item])
        if pivot <= 0.:
            raise KernelBreakdown(f'Non-positive pivot {pivot!r} at item '
                                  f'{item}.')
        k = self._size
        e = (self.kernel[item] -
             np.dot(self._factors[:k, item], self._factors[:k])) / \
            math.sqrt(pivot)
        self._factors[k] = e
        self.residuals = self.residuals - np.square(e)
        self._size += 1
        return pivot


def dpp_kernel(inst: Instance, jitter: float = 0.) -> np.ndarray:
    """The similarity kernel ``S = 1 - d``, plus `jitter` on the diagonal."""
    kernel = 1. - inst.dist
    if jitter:
        kernel = kernel + jitter * np.eye(inst.n)
    return kernel


class _PivotFailure(Exception):
    pass


def _greedy_map(inst: Instance, lam: float, jitter: float):
    n = inst.n
    chol = IncrementalCholesky(dpp_kernel(inst, jitter))
    chosen = np.zeros([n], dtype=np.bool_)
    order, logs = [], []
    for _ in range(n):
        remaining = np.where(~chosen)[0]
        res = chol.residuals[remaining]
        if np.any(res <= _PIVOT_TOL):
            raise _PivotFailure()
        scores = lam * inst.probs[remaining] + (1. - lam) * np.log(res)
        v = int(remaining[int(np.argmax(scores))])
        logs.append(math.log(chol.select(v)))
        order.append(v)
        chosen[v] = True
    return order, np.cumsum(logs)


def dpp_trace(inst: Instance,
              cfg: Optional[BaselineConfig] = None,
              **kwargs) -> DppTrace:
    """
    Greedy MAP inference of a DPP with quality-diversity trade-off: select
    the item maximizing ``lambda * p_i + (1 - lambda) * (log det(S[R + i])
    - log det(S[R]))`` with ``S = 1 - d``, where the log-det gains are
    maintained by rank-one updates of a triangular factor.

    If some pivot is not positive, the selection restarts on
    ``S + settings.dpp_jitter * I`` with a :class:`KernelJitterWarning`.

    Raises:
        KernelBreakdown: If a pivot is still not positive after the jitter.
    """
    lam = validate_baseline_config(cfg, **kwargs).lambda_
    try:
        order, logdets = _greedy_map(inst, lam, 0.)
        jitter = 0.
    except _PivotFailure:
        jitter = settings.dpp_jitter
        warnings.warn(
            f'The DPP kernel is singular or indefinite: regularized with '
            f'jitter {jitter!r}.', KernelJitterWarning
        )
        try:
            order, logdets = _greedy_map(inst, lam, jitter)
        except _PivotFailure:
            raise KernelBreakdown(
                f'The DPP kernel is not positive definite even with jitter '
                f'{jitter!r}.') from None
    return DppTrace(ordering=Ordering(np.asarray(order, dtype=np.int64)),
                    logdets=logdets, jitter=jitter)


def dpp_rank(inst: Instance,
             cfg: Optional[BaselineConfig] = None,
             **kwargs) -> Ordering:
    """The ordering of :func:`dpp_trace`."""
    return dpp_trace(inst, cfg, **kwargs).ordering
