import itertools
from typing import *

import mltk
import numpy as np

from ..arg_check import *
from ..core import *
from ..errors import *
from ..objective import batch_ell_hat, batch_ell_tilde
from ..objective.sequential import uniform_probability
from ..settings_ import settings
from ..typing_ import *

__all__ = [
    'BkeConfig', 'validate_bke_config',
    'best_k_items', 'best_k_items_heuristic', 'greedy_extend',
    'iter_ordered_tuples', 'search_best_prefix',
]


class BkeConfig(mltk.Config):
    """Configuration of the best-κ items algorithm."""

    kappa: int = 2
    mode: str = ProbabilityMode.NON_UNIFORM.value
    extension: str = ExtensionMode.GREEDY.value
    candidate_cap: Optional[int] = None


class _BkeArgs(NamedTuple):
    kappa: int
    mode: ProbabilityMode
    extension: ExtensionMode
    candidate_cap: Optional[int]


def validate_bke_config(cfg: BkeConfig, n: int) -> _BkeArgs:
    """
    Validate `cfg` against an instance of `n` items.

    Raises:
        KappaOutOfRange: If ``kappa < 2`` or ``kappa > n``, or if
            ``candidate_cap < kappa``.
        ConfigValidationError: If `mode` or `extension` is not recognized.
    """
    kappa = int(cfg.kappa)
    if kappa < 2 or kappa > n:
        raise KappaOutOfRange(f'`kappa` must be in [2, {n}]: got {kappa!r}')
    mode = validate_enum('mode', cfg.mode, ProbabilityMode)
    extension = validate_enum('extension', cfg.extension, ExtensionMode)
    cap = cfg.candidate_cap
    if cap is not None:
        cap = int(cap)
        if cap < kappa:
            raise KappaOutOfRange(f'`candidate_cap` must be at least `kappa` '
                                  f'({kappa}): got {cap!r}')
    return _BkeArgs(kappa=kappa, mode=mode, extension=extension,
                    candidate_cap=cap)


def _make_config(cfg: Optional[BkeConfig], kwargs) -> BkeConfig:
    if cfg is None:
        return BkeConfig(**kwargs)
    if kwargs:
        values = {k: getattr(cfg, k) for k in
                  ('kappa', 'mode', 'extension', 'candidate_cap')}
        values.update(kwargs)
        return BkeConfig(**values)
    return cfg


# ---- exhaustive search over ordered κ-tuples ----
def _expand(rows: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    # append every candidate not already in the row; row-major, thus
    # lexicographic when `rows` and `candidates` are
    b, m = rows.shape[0], len(candidates)
    rep = np.repeat(rows, m, axis=0)
    col = np.tile(candidates, b)
    keep = ~np.any(rep == col[:, None], axis=1)
    return np.concatenate([rep, col[:, None]], axis=1)[keep]


def _num_arrangements(m: int, k: int) -> int:
    ret = 1
    for i in range(k):
        ret *= (m - i)
    return ret


def iter_ordered_tuples(candidates: Sequence[int],
                        kappa: int,
                        chunk_size: Optional[int] = None
                        ) -> Iterator[np.ndarray]:
    """
    Iterate over all ordered `kappa`-tuples of distinct `candidates`, in
    lexicographic order of the (sorted) candidates, as ``(batch, kappa)``
    integer arrays of at most about `chunk_size` rows.

    The tuples are grouped by their leading items (the "heads"), where the
    head length is the smallest one whose completions fit in `chunk_size`
    rows.  Consecutive heads are then expanded together, as many as the
    chunk can hold.

    >>> [b.tolist() for b in iter_ordered_tuples([2, 0, 1], 2)]
    [[[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1]]]
    """
    if chunk_size is None:
        chunk_size = settings.brute_force_chunk_size
    candidates = np.sort(np.asarray(candidates, dtype=np.int64))
    m = len(candidates)

    depth = 0
    while depth < kappa - 1 and \
            _num_arrangements(m - depth, kappa - depth) > chunk_size:
        depth += 1
    per_head = max(_num_arrangements(m - depth, kappa - depth), 1)
    heads_per_batch = max(chunk_size // per_head, 1)

    # `permutations` of a sorted sequence come in lexicographic order
    heads = itertools.permutations(candidates.tolist(), depth)
    while True:
        group = list(itertools.islice(heads, heads_per_batch))
        if not group:
            break
        rows = np.asarray(group, dtype=np.int64).reshape([len(group), depth])
        for _ in range(kappa - depth):
            rows = _expand(rows, candidates)
        if len(rows):
            yield rows


def search_best_prefix(inst: Instance,
                       kappa: int,
                       mode: ProbabilityMode = ProbabilityMode.NON_UNIFORM,
                       candidates: Optional[Sequence[int]] = None,
                       p: Optional[float] = None
                       ) -> Tuple[np.ndarray, float]:
    """
    Find the ordered `kappa`-tuple of `candidates` maximizing ``ell_hat``
    (uniform mode) or ``ell_tilde`` (non-uniform mode).

    Ties are resolved to the lexicographically-smallest tuple.

    Returns:
        The best tuple and its surrogate value.
    """
    if candidates is None:
        candidates = np.arange(inst.n)
    if mode == ProbabilityMode.UNIFORM:
        if p is None:
            p = uniform_probability(inst)
        if not (0. < p < 1.):
            raise DegenerateProbability(
                f'Uniform mode requires the probability to be in (0, 1): '
                f'got {p!r}')
        score_fn = lambda rows: batch_ell_hat(inst, rows, p)
    else:
        score_fn = lambda rows: batch_ell_tilde(inst, rows)

    best_row, best_score = None, -np.inf
    for rows in iter_ordered_tuples(candidates, kappa):
        scores = score_fn(rows)
        pos = int(np.argmax(scores))
        if scores[pos] > best_score:
            best_row, best_score = rows[pos].copy(), float(scores[pos])
    if best_row is None:
        raise TooFewItems(len(candidates), kappa, 'The best-κ items search')
    return best_row, best_score


# ---- extension ----
def greedy_extend(inst: Instance, prefix: OrderingLike) -> Ordering:
    """
    Extend `prefix` to a full ordering, appending at each step the item with
    the largest marginal OSD gain ``p_{O_t} * p_v * d(v, O_t)`` (ties to the
    lowest index).  Distances to the prefix are maintained incrementally.
    """
    perm = as_prefix(inst, prefix)
    n = inst.n
    ret = list(perm)
    chosen = np.zeros([n], dtype=np.bool_)
    chosen[perm] = True
    to_prefix = np.sum(inst.dist[:, perm], axis=1) if len(perm) else \
        np.zeros([n])
    last = float(np.prod(inst.probs[perm])) if len(perm) else 1.

    for _ in range(n - len(perm)):
        remaining = np.where(~chosen)[0]
        gains = last * inst.probs[remaining] * to_prefix[remaining]
        v = int(remaining[int(np.argmax(gains))])
        ret.append(v)
        chosen[v] = True
        to_prefix += inst.dist[:, v]
        last *= float(inst.probs[v])

    return Ordering(np.asarray(ret, dtype=np.int64))


def _arbitrary_extend(inst: Instance, prefix: np.ndarray) -> Ordering:
    rest = np.setdiff1d(np.arange(inst.n), prefix)
    return Ordering(np.concatenate([prefix, rest]).astype(np.int64))


def _extend(inst: Instance, prefix: np.ndarray,
            extension: ExtensionMode) -> Ordering:
    if extension == ExtensionMode.GREEDY:
        return greedy_extend(inst, prefix)
    return _arbitrary_extend(inst, prefix)


# ---- the algorithms ----
def best_k_items(inst: Instance,
                 cfg: Optional[BkeConfig] = None,
                 **kwargs) -> Ordering:
    """
    The best-κ items algorithm.

    Exhaustively searches the ordered κ-subsequence maximizing the truncated
    surrogate of the ordered Hamiltonian path (``ell_hat`` if `cfg.mode` is
    uniform, ``ell_tilde`` otherwise), then extends it to a full ordering.

    Args:
        inst: The instance.
        cfg: The configuration.  Individual fields may also be overridden
            by keyword arguments, e.g., ``best_k_items(inst, kappa=3)``.

    Raises:
        KappaOutOfRange: If ``kappa`` is not in ``[2, n]``.
        NonUniformProbsInUniformMode: If uniform mode is requested on
            non-uniform probabilities.
        DegenerateProbability: If the uniform probability is 0 or 1.
    """
    args = validate_bke_config(_make_config(cfg, kwargs), inst.n)
    prefix, _ = search_best_prefix(inst, args.kappa, args.mode)
    return _extend(inst, prefix, args.extension)


def best_k_items_heuristic(inst: Instance,
                           cfg: Optional[BkeConfig] = None,
                           **kwargs) -> Ordering:
    """
    The best-κ items algorithm restricted to a candidate set.

    The candidates are the first ``candidate_cap`` items selected by the
    greedy marginal-OSD algorithm.  The exhaustive search runs on the
    sub-instance of the candidates, while the extension still ranges over
    all the items.

    Raises:
        ConfigValidationError: If `candidate_cap` is not specified.
    """
    args = validate_bke_config(_make_config(cfg, kwargs), inst.n)
    if args.candidate_cap is None:
        raise ConfigValidationError(
            '`candidate_cap` is required by the heuristic best-κ items '
            'algorithm.')
    if args.mode == ProbabilityMode.UNIFORM:
        uniform_probability(inst)  # fail early

    from .greedy import greedy_rank
    cap = min(args.candidate_cap, inst.n)
    candidates = np.sort(greedy_rank(inst).prefix(cap))
    # the candidates are sorted, so the tie rule survives the relabeling
    local, _ = search_best_prefix(
        inst.subinstance(candidates), args.kappa, args.mode)
    prefix = candidates[local]
    return _extend(inst, prefix, args.extension)
