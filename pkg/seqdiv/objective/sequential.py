from typing import *

import numpy as np

from ..core import *
from ..errors import *
from ..typing_ import *
from .diversity import *

__all__ = [
    # acceptance law
    'WeightVector', 'acceptance_probabilities', 'edge_weights',

    # sequential objectives
    'osd_definitional', 'osd', 'ocd', 'ohp', 'ell_hat', 'ell_tilde',

    # partial sequences and append-style gains
    'prefix_osd', 'prefix_ocd', 'osd_gain', 'osd_gains', 'ocd_gain',
    'ocd_gains', 'distance_to_prefix',
]


class WeightVector(NamedTuple):
    """Edge coefficients of the ordered Hamiltonian path."""

    w: np.ndarray
    """``w[i] = sum(cum[j] for j in range(i + 1, n))``, of length ``n - 1``."""


def _law(probs_in_order: np.ndarray) -> np.ndarray:
    cum = np.cumprod(probs_in_order)
    ret = np.empty([len(probs_in_order) + 1], dtype=np.float64)
    ret[0] = 1. - probs_in_order[0] if len(probs_in_order) else 1.
    # Pr(A = O_k) = p_{O_k} * (1 - p_{pi(k+1)}), the user accepts everything
    # at the end of the sequence.
    ret[1:-1] = cum[:-1] * (1. - probs_in_order[1:])
    if len(probs_in_order):
        ret[-1] = cum[-1]
    return ret


def acceptance_probabilities(inst: Instance, ord: OrderingLike) -> np.ndarray:
    """
    The law of the accepted prefix: ``ret[k] = Pr(A = O_k)`` for
    ``k = 0 .. len(ord)``, where ``O_0`` is the empty prefix.

    The entries telescope, so they sum to one.
    """
    perm = as_prefix(inst, ord)
    return _law(inst.probs[perm])


def edge_weights(inst: Instance, ord: OrderingLike) -> WeightVector:
    """Compute the ordered Hamiltonian path coefficients ``W_{O_i}``."""
    cum = prefix_products(inst, ord).cum
    if len(cum) < 2:
        return WeightVector(w=np.zeros([0]))
    tail = np.cumsum(cum[::-1])[::-1]
    return WeightVector(w=tail[1:])


def distance_to_prefix(inst: Instance, perm: np.ndarray) -> np.ndarray:
    """``ret[i] = sum(d(perm[i], perm[j]) for j < i)``."""
    sub = inst.dist[np.ix_(perm, perm)]
    return np.sum(np.tril(sub, -1), axis=1)


def osd_definitional(inst: Instance, ord: OrderingLike) -> Score:
    """
    Sequential sum diversity evaluated from its definition, i.e., the
    expectation of :func:`div_sum` over the law of the accepted prefix.

    This is the slow reference implementation of :func:`osd`.
    """
    perm = as_prefix(inst, ord)
    law = _law(inst.probs[perm])
    return float(sum(law[k] * div_sum(inst, perm[:k])
                     for k in range(2, len(perm) + 1)))


def osd(inst: Instance, ord: OrderingLike) -> Score:
    """
    Sequential sum diversity in closed form:
    ``sum(p_{O_{i+1}} * d(pi(i+1), O_i))``, computed in ``O(n^2)``.

    >>> from seqdiv import build_instance
    >>> inst = build_instance([[0, .3, 1], [.3, 0, 1], [1, 1, 0]], [1, 1, 0])
    >>> [round(osd(inst, o), 12) for o in ([0, 1, 2], [0, 2, 1], [2, 0, 1])]
    [0.3, 0.0, 0.0]
    """
    perm = as_prefix(inst, ord)
    if len(perm) < 2:
        return 0.
    cum = np.cumprod(inst.probs[perm])
    return float(np.dot(cum, distance_to_prefix(inst, perm)))


def ocd(inst: Instance, ord: OrderingLike) -> Score:
    """
    Sequential coverage diversity: the expectation of :func:`div_cov` over
    the law of the accepted prefix.

    Raises:
        MissingCategories: If `inst` has no categories.
    """
    perm = as_prefix(inst, ord)
    law = _law(inst.probs[perm])
    return float(np.dot(law, coverage_counts(inst, perm)))


def ohp(inst: Instance, ord: OrderingLike) -> Score:
    """
    Ordered Hamiltonian path: ``sum(W_{O_i} * d(pi(i), pi(i+1)))``.

    Raises:
        TooFewItems: If the ordering has less than two items.
    """
    perm = as_prefix(inst, ord)
    if len(perm) < 2:
        raise TooFewItems(len(perm), 2, 'The ordered Hamiltonian path')
    w = edge_weights(inst, perm).w
    return float(np.dot(w, inst.dist[perm[:-1], perm[1:]]))


def ell_hat(inst: Instance,
            prefix: OrderingLike,
            p: Optional[float] = None) -> Score:
    """
    The truncated surrogate of the ordered Hamiltonian path under uniform
    continuation probability `p`:
    ``sum(p ** (i + 1) / (1 - p) * d(pi(i), pi(i+1)) for i in 1 .. k-1)``.

    Args:
        inst: The instance.
        prefix: The ``k``-item prefix, ``k >= 2``.
        p: The uniform probability.  If not specified, the instance must
            have uniform probabilities, and their common value is used.

    Raises:
        DegenerateProbability: If `p` is 0 or 1.
        NonUniformProbsInUniformMode: If `p` is not specified while the
            probabilities of `inst` are not uniform.
        TooFewItems: If the prefix has less than two items.
    """
    perm = as_prefix(inst, prefix)
    if len(perm) < 2:
        raise TooFewItems(len(perm), 2, '`ell_hat`')
    p = uniform_probability(inst) if p is None else float(p)
    if not (0. < p < 1.):
        raise DegenerateProbability(f'`p` must be in (0, 1): got {p!r}')
    coef = p ** np.arange(2, len(perm) + 1) / (1. - p)
    return float(np.dot(coef, inst.dist[perm[:-1], perm[1:]]))


def ell_tilde(inst: Instance, prefix: OrderingLike) -> Score:
    """
    The truncated surrogate of the ordered Hamiltonian path under arbitrary
    continuation probabilities:
    ``sum(sum(p_{O_j} for j in i+1 .. k) * d(pi(i), pi(i+1)) for i in 1 .. k-1)``,
    i.e., the ordered Hamiltonian path of the prefix on its own.

    Raises:
        TooFewItems: If the prefix has less than two items.
    """
    perm = as_prefix(inst, prefix)
    if len(perm) < 2:
        raise TooFewItems(len(perm), 2, '`ell_tilde`')
    w = edge_weights(inst, perm).w
    return float(np.dot(w, inst.dist[perm[:-1], perm[1:]]))


def uniform_probability(inst: Instance) -> float:
    if not inst.is_uniform():
        raise NonUniformProbsInUniformMode(
            f'The continuation probabilities are not uniform: they range '
            f'from {inst.probs.min()!r} to {inst.probs.max()!r}.')
    return float(inst.probs[0])


# ---- partial sequences ----
def prefix_osd(inst: Instance, prefix: OrderingLike) -> Score:
    """OSD of a partial sequence, assuming the user stops after its end."""
    return osd(inst, prefix)


def prefix_ocd(inst: Instance, prefix: OrderingLike) -> Score:
    """OCD of a partial sequence, assuming the user stops after its end."""
    return ocd(inst, prefix)


def _last_product(inst: Instance, perm: np.ndarray) -> float:
    return float(np.prod(inst.probs[perm])) if len(perm) else 1.


def osd_gains(inst: Instance,
              prefix: OrderingLike,
              candidates: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    ``prefix_osd(prefix || v) - prefix_osd(prefix)`` for each candidate `v`,
    which equals ``p_{O_t} * p_v * d(v, O_t)``.

    Args:
        inst: The instance.
        prefix: The current partial sequence ``O_t``.
        candidates: The candidate items.  Defaults to all items not in
            `prefix`, in ascending order.
    """
    perm = as_prefix(inst, prefix)
    if candidates is None:
        candidates = np.setdiff1d(np.arange(inst.n), perm)
    candidates = np.asarray(candidates, dtype=np.int64)
    to_prefix = np.sum(inst.dist[np.ix_(candidates, perm)], axis=1)
    return _last_product(inst, perm) * inst.probs[candidates] * to_prefix


def osd_gain(inst: Instance, prefix: OrderingLike, item: int) -> Score:
    return float(osd_gains(inst, prefix, [item])[0])


def ocd_gains(inst: Instance,
              prefix: OrderingLike,
              candidates: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    ``prefix_ocd(prefix || v) - prefix_ocd(prefix)`` for each candidate `v`,
    which equals ``p_{O_t} * p_v * (|C(O_t + v)| - |C(O_t)|)``.
    """
    mat = inst.category_matrix
    perm = as_prefix(inst, prefix)
    if candidates is None:
        candidates = np.setdiff1d(np.arange(inst.n), perm)
    candidates = np.asarray(candidates, dtype=np.int64)
    covered = np.any(mat[perm], axis=0) if len(perm) else \
        np.zeros([mat.shape[1]], dtype=np.bool_)
    new_cats = np.count_nonzero(mat[candidates] & ~covered, axis=1)
    return _last_product(inst, perm) * inst.probs[candidates] * new_cats


def ocd_gain(inst: Instance, prefix: OrderingLike, item: int) -> Score:
    return float(ocd_gains(inst, prefix, [item])[0])
