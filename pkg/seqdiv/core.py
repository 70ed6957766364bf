from typing import *

import numpy as np
from scipy.sparse.csgraph import csgraph_from_dense, shortest_path

from .errors import *
from .settings_ import settings

__all__ = [
    # domain types
    'Instance', 'Ordering', 'PrefixProducts', 'MetricReport',

    # instance construction and validation
    'build_instance', 'as_ordering', 'as_prefix', 'identity_ordering',
    'metric_closure',

    # shared machinery
    'prefix_products', 'check_metric',
]


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class MetricReport(NamedTuple):
    """Result of the exhaustive triangle-inequality scan of :func:`check_metric`."""

    is_metric: bool
    """Whether or not ``worst_violation <= tol``."""

    worst_violation: float
    """The largest ``max(0, d(i, k) - d(i, j) - d(j, k))`` over all triples."""

    violating_triple: Optional[Tuple[int, int, int]]
    """The ``(i, j, k)`` attaining `worst_violation`, if it is positive."""


class Instance(object):
    """
    An item universe: pairwise distances, continuation probabilities, and
    optionally the category sets and feature vectors of the items.

    Instances are immutable after construction (all arrays are read-only),
    thus can be shared freely.  Use :func:`build_instance` to construct a
    validated instance.
    """

    __slots__ = ('_dist', '_probs', '_categories', '_features',
                 '_category_matrix', '_metric_report')

    _dist: np.ndarray
    _probs: np.ndarray
    _categories: Optional[Tuple[FrozenSet[Hashable], ...]]
    _features: Optional[np.ndarray]
    _category_matrix: Optional[np.ndarray]
    _metric_report: Optional[MetricReport]

    def __init__(self,
                 dist: np.ndarray,
                 probs: np.ndarray,
                 categories: Optional[Tuple[FrozenSet[Hashable], ...]] = None,
                 features: Optional[np.ndarray] = None,
                 metric_report: Optional[MetricReport] = None):
        # no validation here, `build_instance` is the public constructor
        self._dist = _readonly(dist)
        self._probs = _readonly(probs)
        self._categories = categories
        self._features = _readonly(features) if features is not None else None
        self._metric_report = metric_report

        if categories is not None:
            vocab = {}
            for cats in categories:
                for c in cats:
                    vocab.setdefault(c, len(vocab))
            mat = np.zeros([len(categories), len(vocab)], dtype=np.bool_)
            for i, cats in enumerate(categories):
                for c in cats:
                    mat[i, vocab[c]] = True
            self._category_matrix = _readonly(mat)
        else:
            self._category_matrix = None

    def __repr__(self):
        extras = []
        if self._categories is not None:
            extras.append(f'categories={self._category_matrix.shape[1]}')
        if self._features is not None:
            extras.append(f'features={self._features.shape[1]}')
        extras = ''.join(f', {s}' for s in extras)
        return f'Instance(n={self.n}{extras})'

    @property
    def n(self) -> int:
        """The number of items."""
        return self._probs.shape[0]

    @property
    def dist(self) -> np.ndarray:
        """The ``(n, n)`` symmetric distance matrix with zero diagonal."""
        return self._dist

    @property
    def probs(self) -> np.ndarray:
        """The ``(n,)`` continuation probabilities."""
        return self._probs

    @property
    def categories(self) -> Optional[Tuple[FrozenSet[Hashable], ...]]:
        """The category (attribute) set of each item, if present."""
        return self._categories

    @property
    def features(self) -> Optional[np.ndarray]:
        """The ``(n, dim)`` feature vectors, if present."""
        return self._features

    @property
    def category_matrix(self) -> np.ndarray:
        """
        The ``(n, n_categories)`` boolean membership matrix, where column
        order follows the first appearance of each category.

        Raises:
            MissingCategories: If the instance has no categories.
        """
        if self._category_matrix is None:
            raise MissingCategories()
        return self._category_matrix

    @property
    def has_categories(self) -> bool:
        return self._categories is not None

    @property
    def metric_report(self) -> Optional[MetricReport]:
        """The attached :class:`MetricReport`, if computed at construction."""
        return self._metric_report

    def is_uniform(self, tol: Optional[float] = None) -> bool:
        """Whether or not all continuation probabilities are equal."""
        if tol is None:
            tol = settings.uniform_tol
        return bool(np.ptp(self._probs) <= tol)

    def avg_distance(self) -> float:
        """The average distance over all unordered pairs of distinct items."""
        n = self.n
        if n < 2:
            return 0.
        return float(np.sum(np.triu(self._dist, 1)) / (n * (n - 1) / 2))

    def subinstance(self, items: Sequence[int]) -> 'Instance':
        """
        Restrict this instance to `items`.  Item ``t`` of the returned
        instance is item ``items[t]`` of this instance.
        """
        idx = np.asarray(items, dtype=np.int64)
        categories = None
        if self._categories is not None:
            categories = tuple(self._categories[i] for i in idx)
        features = None
        if self._features is not None:
            features = np.array(self._features[idx])
        return Instance(
            dist=np.array(self._dist[np.ix_(idx, idx)]),
            probs=np.array(self._probs[idx]),
            categories=categories,
            features=features,
        )


class Ordering(object):
    """A permutation of the item indices ``0 .. n-1``."""

    __slots__ = ('_perm',)

    _perm: np.ndarray

    def __init__(self, perm: np.ndarray):
        # no validation here, use `as_ordering` to build a validated ordering
        self._perm = _readonly(np.asarray(perm, dtype=np.int64))

    def __repr__(self):
        return f'Ordering({self._perm.tolist()})'

    def __len__(self):
        return self._perm.shape[0]

    def __iter__(self):
        return iter(self._perm.tolist())

    def __getitem__(self, item):
        return self._perm[item]

    def __eq__(self, other):
        if isinstance(other, Ordering):
            other = other._perm
        else:
            other = np.asarray(other)
        return other.shape == self._perm.shape and \
            bool(np.all(other == self._perm))

    def __hash__(self):
        return hash(tuple(self._perm.tolist()))

    @property
    def perm(self) -> np.ndarray:
        """The read-only ``(n,)`` array of item indices."""
        return self._perm

    def tolist(self) -> List[int]:
        return self._perm.tolist()

    def prefix(self, k: int) -> np.ndarray:
        """The first `k` items of this ordering."""
        return self._perm[:k]


class PrefixProducts(NamedTuple):
    """Cumulative products of the continuation probabilities along an ordering."""

    cum: np.ndarray
    """``cum[i] = prod(probs[perm[t]] for t in range(i + 1))``."""


def _as_float_array(name: str, value, ndim: int) -> np.ndarray:
    try:
        ret = np.array(value, dtype=np.float64)
    except (TypeError, ValueError):
        raise DimensionMismatch(f'`{name}` must be a {ndim}d array of '
                                f'floats: got {value!r}')
    if ret.ndim != ndim:
        raise DimensionMismatch(f'`{name}` must be a {ndim}d array: '
                                f'got shape {ret.shape}')
    return ret


def build_instance(dist,
                   probs,
                   categories: Optional[Sequence[Iterable[Hashable]]] = None,
                   features=None,
                   with_metric_report: bool = False,
                   tol: Optional[float] = None) -> Instance:
    """
    Construct a validated :class:`Instance`.

    Args:
        dist: The ``(n, n)`` distance matrix.
        probs: The ``(n,)`` continuation probabilities.
        categories: Optional category sets, one per item.
        features: Optional ``(n, dim)`` feature vectors.
        with_metric_report: Whether or not to run :func:`check_metric` and
            attach its report to the instance?
        tol: Absolute tolerance of the checks.  Defaults to
            ``settings.float_tol``.

    Returns:
        The instance.

    Raises:
        DimensionMismatch: If the shapes are inconsistent.
        AsymmetricDistance: If ``dist[i, j] != dist[j, i]``.
        NonzeroDiagonal: If ``dist[i, i] != 0``.
        NegativeDistance: If some distance is negative.
        ProbabilityOutOfRange: If some probability is outside ``[0, 1]``.
    """
    if tol is None:
        tol = settings.float_tol

    dist = _as_float_array('dist', dist, 2)
    probs = _as_float_array('probs', probs, 1)
    n = probs.shape[0]
    if n < 1:
        raise DimensionMismatch('`probs` must contain at least one item.')
    if dist.shape != (n, n):
        raise DimensionMismatch(f'`dist` must be a ({n}, {n}) matrix: '
                                f'got shape {dist.shape}')
    if not np.all(np.isfinite(dist)):
        raise DimensionMismatch('`dist` must contain only finite values.')

    # probabilities
    bad = np.where(~((probs >= -tol) & (probs <= 1. + tol)))[0]
    if len(bad):
        i = int(bad[0])
        raise ProbabilityOutOfRange(
            i, f'`probs[{i}]` must be in [0, 1]: got {probs[i]!r}')
    probs = np.clip(probs, 0., 1.)

    # distances
    diag = np.where(np.abs(np.diag(dist)) > tol)[0]
    if len(diag):
        i = int(diag[0])
        raise NonzeroDiagonal(
            i, f'`dist[{i}, {i}]` must be zero: got {dist[i, i]!r}')
    asym = np.argwhere(np.abs(dist - dist.T) > tol)
    if len(asym):
        i, j = map(int, asym[0])
        raise AsymmetricDistance(
            i, j, f'`dist[{i}, {j}]` != `dist[{j}, {i}]`: '
                  f'{dist[i, j]!r} vs {dist[j, i]!r}')
    neg = np.argwhere(dist < -tol)
    if len(neg):
        i, j = map(int, neg[0])
        raise NegativeDistance(
            i, f'`dist[{i}, {j}]` must be non-negative: got {dist[i, j]!r}')
    dist = np.maximum(0.5 * (dist + dist.T), 0.)
    np.fill_diagonal(dist, 0.)

    # optional attributes
    if categories is not None:
        categories = tuple(frozenset(c) for c in categories)
        if len(categories) != n:
            raise DimensionMismatch(f'`categories` must have exactly {n} '
                                    f'entries: got {len(categories)}')
    if features is not None:
        features = _as_float_array('features', features, 2)
        if features.shape[0] != n:
            raise DimensionMismatch(f'`features` must have exactly {n} rows: '
                                    f'got {features.shape[0]}')

    inst = Instance(dist=dist, probs=probs, categories=categories,
                    features=features)
    if with_metric_report:
        inst = Instance(dist=dist, probs=probs, categories=categories,
                        features=features,
                        metric_report=check_metric(inst, tol=tol))
    return inst


def _num_items(inst_or_n: Union[Instance, int]) -> int:
    return inst_or_n.n if isinstance(inst_or_n, Instance) else int(inst_or_n)


def as_prefix(inst_or_n: Union[Instance, int], items) -> np.ndarray:
    """
    Validate a sequence of distinct item indices (a partial ordering).

    Raises:
        InvalidOrdering: If some index is out of range or repeated.
    """
    if isinstance(items, Ordering):
        return items.perm
    n = _num_items(inst_or_n)
    arr = np.asarray(items, dtype=np.int64).reshape([-1])
    if len(arr) and (arr.min() < 0 or arr.max() >= n):
        bad = int(arr[(arr < 0) | (arr >= n)][0])
        raise InvalidOrdering(f'Item index {bad} is out of range [0, {n}).')
    counts = np.bincount(arr, minlength=n)
    dup = np.where(counts > 1)[0]
    if len(dup):
        raise InvalidOrdering(f'Item {int(dup[0])} appears more than once.')
    return arr


def as_ordering(inst_or_n: Union[Instance, int], perm) -> Ordering:
    """
    Validate `perm` as a permutation of ``0 .. n-1``.

    Raises:
        InvalidOrdering: If `perm` is not a permutation of the items.
    """
    n = _num_items(inst_or_n)
    if isinstance(perm, Ordering):
        if len(perm) != n:
            raise InvalidOrdering(f'The ordering has {len(perm)} items, '
                                  f'but the instance has {n}.')
        return perm
    arr = as_prefix(n, perm)
    if len(arr) != n:
        missing = np.setdiff1d(np.arange(n), arr)
        raise InvalidOrdering(f'The ordering has {len(arr)} items, but the '
                              f'instance has {n}: item {int(missing[0])} is '
                              f'missing.')
    return Ordering(arr)


def identity_ordering(n: int) -> Ordering:
    return Ordering(np.arange(n, dtype=np.int64))


def prefix_products(inst: Instance, ord: Union[Ordering, Sequence[int]]
                    ) -> PrefixProducts:
    """
    Compute ``p_{O_i}``, the probability that the user accepts (at least)
    the first ``i + 1`` items of `ord`.

    `ord` may also be a partial ordering (a prefix), in which case the
    products are taken along the prefix.
    """
    perm = as_prefix(inst, ord)
    cum = np.cumprod(inst.probs[perm])
    return PrefixProducts(cum=cum)


def check_metric(inst: Union[Instance, np.ndarray],
                 tol: Optional[float] = None) -> MetricReport:
    """
    Check the triangle inequality ``d(i, k) <= d(i, j) + d(j, k)`` on all
    triples, and report the worst violation.
    """
    if tol is None:
        tol = settings.float_tol
    if tol < 0:
        raise ValueError(f'`tol` must be non-negative: got {tol!r}')
    dist = inst.dist if isinstance(inst, Instance) else np.asarray(inst)
    n = dist.shape[0]

    worst = 0.
    triple = None
    if n >= 3:
        for j in range(n):
            viol = dist - dist[:, j: j + 1] - dist[j: j + 1, :]
            pos = int(np.argmax(viol))
            v = float(viol.flat[pos])
            if v > worst:
                worst = v
                i, k = divmod(pos, n)
                triple = (i, j, k)

    return MetricReport(is_metric=worst <= tol, worst_violation=worst,
                        violating_triple=triple)


def metric_closure(dist) -> np.ndarray:
    """
    Replace every distance by the shortest-path distance between the two
    items, which makes the matrix satisfy the triangle inequality.
    """
    dist = np.asarray(dist, dtype=np.float64)
    graph = csgraph_from_dense(dist, null_value=np.inf)
    ret = shortest_path(graph, method='FW', directed=False)
    ret = 0.5 * (ret + ret.T)
    np.fill_diagonal(ret, 0.)
    return ret
