import itertools
from typing import *

import numpy as np

from ..algorithms.best_k import iter_ordered_tuples
from ..arg_check import validate_enum
from ..core import *
from ..errors import *
from ..objective import *
from ..objective.sequential import uniform_probability
from ..settings_ import settings
from ..typing_ import *

__all__ = ['OracleResult', 'BATCH_EVALUATORS', 'brute_force',
           'brute_force_surrogate']


class OracleResult(NamedTuple):
    best_ordering: Ordering
    """The first optimal ordering in lexicographic order."""

    best_score: Score
    """The objective value of `best_ordering`."""

    evaluated: int
    """The number of enumerated (partial) orderings."""


BATCH_EVALUATORS: Dict[str, Callable[[Instance, np.ndarray], np.ndarray]] = {
    ObjectiveKind.OSD.value: batch_osd,
    ObjectiveKind.OCD.value: batch_ocd,
    ObjectiveKind.OHP.value: batch_ohp,
    'osd_definitional': batch_osd_definitional,
}
"""Vectorized evaluators usable by :func:`brute_force`."""


def brute_force(inst: Instance,
                objective: Union[str, ObjectiveKind] = ObjectiveKind.OSD
                ) -> OracleResult:
    """
    Maximize `objective` over all the ``n!`` orderings, enumerated in
    lexicographic order, in vectorized batches.

    Args:
        inst: The instance, with at most ``settings.max_brute_force_items``
            items.
        objective: ``'osd'``, ``'ocd'``, ``'ohp'``, or
            ``'osd_definitional'`` (the OSD via the acceptance law, a second
            evaluator for cross-checking).

    Raises:
        InstanceTooLarge: If the instance has too many items.
    """
    n = inst.n
    if n > settings.max_brute_force_items:
        raise InstanceTooLarge(n, settings.max_brute_force_items)
    name = objective.value if isinstance(objective, ObjectiveKind) \
        else str(objective).lower()
    if name not in BATCH_EVALUATORS:
        raise ConfigValidationError(
            f'`objective` must be one of {", ".join(BATCH_EVALUATORS)}: '
            f'got {objective!r}')
    evaluate = BATCH_EVALUATORS[name]
    if name == ObjectiveKind.OHP.value and n < 2:
        raise TooFewItems(n, 2, 'The ordered Hamiltonian path')

    if n == 1:
        best = identity_ordering(1)
        score = ocd(inst, best) if name == ObjectiveKind.OCD.value else 0.
        return OracleResult(best_ordering=best, best_score=score, evaluated=1)

    best_row, best_score, evaluated = None, -np.inf, 0
    for rows in iter_ordered_tuples(np.arange(n), n):
        scores = evaluate(inst, rows)
        pos = int(np.argmax(scores))
        if scores[pos] > best_score:
            best_row, best_score = rows[pos].copy(), float(scores[pos])
        evaluated += len(rows)
    return OracleResult(best_ordering=Ordering(best_row),
                        best_score=best_score, evaluated=evaluated)


def brute_force_surrogate(inst: Instance,
                          kappa: int,
                          mode: Union[str, ProbabilityMode] =
                          ProbabilityMode.NON_UNIFORM) -> OracleResult:
    """
    Maximize ``ell_hat`` (uniform mode) or ``ell_tilde`` over all ordered
    `kappa`-subsequences, one at a time.

    Returns:
        The result, whose `best_ordering` holds the best `kappa`-prefix only.
    """
    n = inst.n
    if kappa < 2 or kappa > n:
        raise KappaOutOfRange(f'`kappa` must be in [2, {n}]: got {kappa!r}')
    mode = validate_enum('mode', mode, ProbabilityMode)
    if mode == ProbabilityMode.UNIFORM:
        p = uniform_probability(inst)
        score_fn = lambda t: ell_hat(inst, t, p)
    else:
        score_fn = lambda t: ell_tilde(inst, t)

    best, best_score, evaluated = None, -np.inf, 0
    for t in itertools.permutations(range(n), kappa):
        s = score_fn(t)
        evaluated += 1
        if s > best_score:
            best, best_score = t, s
    return OracleResult(best_ordering=Ordering(np.asarray(best)),
                        best_score=best_score, evaluated=evaluated)
