"""
Vectorized evaluation of the sequential objectives over a batch of
(partial) orderings, used by the exhaustive searches.

Every function takes `perms`, an integer array of shape ``(batch, k)``,
one sequence per row, and returns a ``(batch,)`` float array.
"""

import numpy as np

from ..core import Instance

__all__ = [
    'batch_prefix_products', 'batch_acceptance_probabilities',
    'batch_osd', 'batch_osd_definitional', 'batch_ocd', 'batch_ohp',
    'batch_ell_hat', 'batch_ell_tilde',
]


def batch_prefix_products(inst: Instance, perms: np.ndarray) -> np.ndarray:
    return np.cumprod(inst.probs[perms], axis=1)


def batch_acceptance_probabilities(inst: Instance, perms: np.ndarray
                                   ) -> np.ndarray:
    p = inst.probs[perms]
    cum = np.cumprod(p, axis=1)
    ret = np.empty([perms.shape[0], perms.shape[1] + 1], dtype=np.float64)
    ret[:, 0] = 1. - p[:, 0]
    ret[:, 1:-1] = cum[:, :-1] * (1. - p[:, 1:])
    ret[:, -1] = cum[:, -1]
    return ret


def _gathered_dist(inst: Instance, perms: np.ndarray) -> np.ndarray:
    return inst.dist[perms[:, :, None], perms[:, None, :]]


def batch_osd(inst: Instance, perms: np.ndarray) -> np.ndarray:
    cum = batch_prefix_products(inst, perms)
    to_prefix = np.sum(np.tril(_gathered_dist(inst, perms), -1), axis=2)
    return np.sum(cum * to_prefix, axis=1)


def batch_osd_definitional(inst: Instance, perms: np.ndarray) -> np.ndarray:
    law = batch_acceptance_probabilities(inst, perms)
    sub = _gathered_dist(inst, perms)
    ret = np.zeros([perms.shape[0]], dtype=np.float64)
    for k in range(2, perms.shape[1] + 1):
        div = np.sum(np.triu(sub[:, :k, :k], 1), axis=(1, 2))
        ret += law[:, k] * div
    return ret


def batch_ocd(inst: Instance, perms: np.ndarray) -> np.ndarray:
    mat = inst.category_matrix
    law = batch_acceptance_probabilities(inst, perms)
    counts = np.zeros_like(law)
    if mat.shape[1]:
        covered = np.logical_or.accumulate(mat[perms], axis=1)
        counts[:, 1:] = np.count_nonzero(covered, axis=2)
    return np.sum(law * counts, axis=1)


def _edges(inst: Instance, perms: np.ndarray) -> np.ndarray:
    return inst.dist[perms[:, :-1], perms[:, 1:]]


def batch_ohp(inst: Instance, perms: np.ndarray) -> np.ndarray:
    cum = batch_prefix_products(inst, perms)
    w = np.cumsum(cum[:, ::-1], axis=1)[:, ::-1][:, 1:]
    return np.sum(w * _edges(inst, perms), axis=1)


def batch_ell_tilde(inst: Instance, perms: np.ndarray) -> np.ndarray:
    # the prefix is scored as if it were the whole sequence
    return batch_ohp(inst, perms)


def batch_ell_hat(inst: Instance, perms: np.ndarray, p: float) -> np.ndarray:
    coef = p ** np.arange(2, perms.shape[1] + 1) / (1. - p)
    return np.sum(coef * _edges(inst, perms), axis=1)
