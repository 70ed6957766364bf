from typing import *

import mltk
import numpy as np

from ..arg_check import *
from ..data import RegimeSpec, get_regime
from ..errors import *
from ..typing_ import *

__all__ = [
    'ALGORITHM_NAMES', 'METRIC_NAMES', 'LAMBDA_ALGORITHMS',
    'ExperimentConfig', 'ExperimentArgs', 'parse_lambda_grid',
    'validate_experiment_config',
]

ALGORITHM_NAMES = (
    'random', 'explore', 'dum', 'msd', 'mmr', 'dpp',
    'b2i', 'b3i', 'b4i', 'b3i-h', 'b4i-h', 'bkm', 'greedy', 'coverage-greedy',
)
# `seconds` is the wall-clock time spent ranking, per user and algorithm
METRIC_NAMES = ('osd', 'ocd', 'expdcg', 'expserendipity', 'expnum',
                'seconds')
LAMBDA_ALGORITHMS = ('mmr', 'msd', 'dpp')

# these require the category sets of the items
_CATEGORY_ALGORITHMS = ('dum', 'coverage-greedy')
_CATEGORY_METRICS = ('ocd', 'expserendipity')


class ExperimentConfig(mltk.Config):
    # the dataset
    dataset_kind: str = DatasetKind.REC.value
    dataset_name: str = 'dataset'
    ratings: Optional[str] = None
    categories: Optional[str] = None
    features: Optional[str] = None
    relevance: Optional[str] = None
    delimiter: str = ','
    max_users: Optional[int] = None

    # probabilities
    regimes: str = RegimeName.MEDIUM.value
    watch_ratio: bool = False  # normalize the ratings onto [1, 5] first
    mf_factors: Optional[int] = None  # None: `default_mf_factors`
    mf_epochs: int = 50

    # algorithms and metrics
    algorithms: str = 'random,b2i'
    metrics: str = 'osd,seconds'
    lambda_grid: str = '0:1:0.1'
    tune_users: int = 20
    candidate_cap: int = 100
    explore_alpha: float = 0.5
    explore_k: int = 10
    explore_steps: int = 10
    explore_adaptation: str = ExploreAdaptation.ACCEPTED_THEN_RANDOM.value
    mc_samples: int = 0

    # the run
    seed: int = 0
    workers: int = 1
    out: str = './results'
    format: str = TableFormat.CSV.value


class ExperimentArgs(NamedTuple):
    dataset_kind: DatasetKind
    regimes: Tuple[RegimeSpec, ...]
    algorithms: Tuple[str, ...]
    metrics: Tuple[str, ...]
    lambda_grid: Tuple[float, ...]
    explore_adaptation: ExploreAdaptation
    format: TableFormat


def parse_lambda_grid(grid: Union[str, Sequence[float]]) -> Tuple[float, ...]:
    """
    Parse a λ grid, either ``start:stop:step`` (inclusive of `stop`) or a
    comma-separated list.

    >>> parse_lambda_grid('0:1:0.25')
    (0.0, 0.25, 0.5, 0.75, 1.0)
    >>> parse_lambda_grid('0.3, 0.1')
    (0.3, 0.1)
    """
    if isinstance(grid, str):
        grid = grid.strip()
        if ':' in grid:
            try:
                start, stop, step = (float(s) for s in grid.split(':'))
            except ValueError:
                raise ConfigValidationError(
                    f'`lambda_grid` must be `start:stop:step`: '
                    f'got {grid!r}') from None
            if not step > 0. or stop < start:
                raise ConfigValidationError(
                    f'`lambda_grid` must have a positive step and '
                    f'start <= stop: got {grid!r}')
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            values = [round(start + i * step, 10) for i in range(count)]
        else:
            values = [float(s) for s in grid.split(',') if s.strip()]
    else:
        values = [float(v) for v in grid]
    if not values:
        raise ConfigValidationError('`lambda_grid` must not be empty.')
    return tuple(validate_unit_interval('lambda_grid', v) for v in values)


def validate_experiment_config(cfg: ExperimentConfig) -> ExperimentArgs:
    """
    Validate an experiment configuration, and parse its list-valued fields.

    Raises:
        ConfigValidationError: If some field is invalid, the algorithm or
            metric list is empty, or the dataset files do not match
            the dataset kind.
    """
    kind = validate_enum('dataset_kind', cfg.dataset_kind, DatasetKind)
    regimes = tuple(
        get_regime(r) for r in validate_choices_list(
            'regimes', cfg.regimes, [r.value for r in RegimeName]))
    algorithms = tuple(validate_choices_list(
        'algorithms', cfg.algorithms, ALGORITHM_NAMES))
    metrics = tuple(validate_choices_list(
        'metrics', cfg.metrics, METRIC_NAMES))

    if kind == DatasetKind.REC:
        if not cfg.ratings or not cfg.categories:
            raise ConfigValidationError(
                '`ratings` and `categories` are required by recommendation '
                'datasets.')
    else:
        if not cfg.relevance or not cfg.features:
            raise ConfigValidationError(
                '`relevance` and `features` are required by retrieval '
                'datasets.')
        for name in algorithms + metrics:
            if name in _CATEGORY_ALGORITHMS + _CATEGORY_METRICS:
                raise ConfigValidationError(
                    f'{name!r} requires item categories, which retrieval '
                    f'datasets do not have.')

    validate_positive_int('tune_users', cfg.tune_users)
    validate_positive_int('candidate_cap', cfg.candidate_cap)
    validate_positive_int('workers', cfg.workers)
    if cfg.mf_factors is not None:
        validate_positive_int('mf_factors', cfg.mf_factors)
    validate_positive_int('mf_epochs', cfg.mf_epochs)
    if cfg.max_users is not None:
        validate_positive_int('max_users', cfg.max_users)
    if int(cfg.mc_samples) < 0:
        raise ConfigValidationError(f'`mc_samples` must be non-negative: '
                                    f'got {cfg.mc_samples!r}')

    return ExperimentArgs(
        dataset_kind=kind,
        regimes=regimes,
        algorithms=algorithms,
        metrics=metrics,
        lambda_grid=parse_lambda_grid(cfg.lambda_grid),
        explore_adaptation=validate_enum(
            'explore_adaptation', cfg.explore_adaptation, ExploreAdaptation),
        format=validate_enum('format', cfg.format, TableFormat),
    )
