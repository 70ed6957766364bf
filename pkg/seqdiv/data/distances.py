from typing import *

import numpy as np

from ..errors import *
from ..typing_ import *

__all__ = ['category_matrix', 'jaccard_distances', 'cosine_distances']


def category_matrix(categories: Sequence[AbstractSet[Hashable]]
                    ) -> Tuple[np.ndarray, List[Hashable]]:
    """
    The boolean ``(n, C)`` item-category incidence matrix, and the sorted
    category vocabulary.
    """
    vocab = sorted({c for cats in categories for c in cats}, key=str)
    pos = {c: i for i, c in enumerate(vocab)}
    mat = np.zeros([len(categories), len(vocab)], dtype=np.bool_)
    for i, cats in enumerate(categories):
        mat[i, [pos[c] for c in cats]] = True
    return mat, vocab


def jaccard_distances(categories: Sequence[AbstractSet[Hashable]]
                      ) -> np.ndarray:
    """
    ``d(i, j) = 1 - |C_i & C_j| / |C_i | C_j|``.

    >>> jaccard_distances([{'a', 'b'}, {'b', 'c'}]).round(4).tolist()
    [[0.0, 0.6667], [0.6667, 0.0]]

    Raises:
        EmptyCategorySet: If some item has no category.
    """
    mat, _ = category_matrix(categories)
    sizes = np.sum(mat, axis=1)
    if len(sizes) and np.any(sizes == 0):
        i = int(np.argmin(sizes))
        raise EmptyCategorySet(i, f'Item {i} has no category: the Jaccard '
                                  f'distance is undefined.')
    m = mat.astype(np.float64)
    inter = m @ m.T
    union = sizes[:, None] + sizes[None, :] - inter
    ret = 1. - inter / union
    np.fill_diagonal(ret, 0.)
    return ret


def cosine_distances(features: ArrayLike) -> np.ndarray:
    """
    ``d(i, j) = 1 - cos(x_i, x_j)``, clipped to ``[0, 2]``.

    The result is in general not a metric.

    Raises:
        ZeroNormVector: If some feature vector is zero.
    """
    x = np.asarray(features, dtype=np.float64)
    if x.ndim != 2:
        raise DimensionMismatch(f'`features` must be a 2d array: '
                                f'got shape {x.shape}')
    norms = np.linalg.norm(x, axis=1)
    if np.any(norms == 0.):
        i = int(np.argmin(norms))
        raise ZeroNormVector(i, f'The feature vector of item {i} is zero.')
    unit = x / norms[:, None]
    ret = np.clip(1. - unit @ unit.T, 0., 2.)
    ret = 0.5 * (ret + ret.T)
    np.fill_diagonal(ret, 0.)
    return ret
