import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import *

import mltk
import numpy as np
import pandas as pd
from frozendict import frozendict

from ..algorithms import *
from ..baselines import *
from ..core import *
from ..data import *
from ..errors import *
from ..objective import *
from ..oracle import monte_carlo_osd
from ..typing_ import *
from ..utils.misc import print_experiment_summary, print_results_summary
from .config import *

__all__ = [
    'PER_USER_COLUMNS', 'AGGREGATE_COLUMNS',
    'UserInstance', 'RankReport', 'load_instances', 'rank_items',
    'score_ordering', 'aggregate_rows', 'run_experiment', 'emit_tables',
    'read_table',
]

PER_USER_COLUMNS = ('dataset', 'regime', 'user', 'algorithm', 'metric',
                    'value')
AGGREGATE_COLUMNS = ('dataset', 'regime', 'algorithm', 'metric', 'mean',
                     'std', 'n_users')


class UserInstance(NamedTuple):
    """The ranking instance of one user (or one query)."""

    user: str
    inst: Instance
    history: Optional[FrozenSet[Hashable]] = None
    """The categories of the user's rated items, for ExpSerendipity."""


class RankReport(NamedTuple):
    rows: Tuple[Mapping[str, Any], ...]
    """Per-(user, algorithm, metric) values, see :obj:`PER_USER_COLUMNS`."""

    aggregates: Tuple[Mapping[str, Any], ...]
    """Mean and (population) std across users, see :obj:`AGGREGATE_COLUMNS`."""

    tuning: Mapping[str, Any]
    """Tuned λ of the trade-off baselines, per regime."""

    notes: Tuple[str, ...]


# ---- instances ----
def _load_rec(cfg: ExperimentConfig,
              regimes: Sequence[RegimeSpec]
              ) -> Dict[str, List[UserInstance]]:
    categories = load_categories(cfg.categories, cfg.delimiter)
    table = load_ratings(cfg.ratings, cfg.delimiter, items=list(categories))
    if cfg.watch_ratio:
        table = table.with_ratings(normalize_watch_ratio(table.ratings))
    item_cats = [categories.get(item, frozenset()) for item in table.items]
    dist = jaccard_distances(item_cats)

    factors = cfg.mf_factors if cfg.mf_factors is not None \
        else default_mf_factors(table)
    mltk.print_with_time(f'Completing the {table.n_users} x {table.n_items} '
                         f'rating matrix with {factors} factors ...')
    pred = complete_ratings_mf(
        table, MfConfig(factors=factors, epochs=cfg.mf_epochs, seed=cfg.seed))
    value_range = table.rating_range

    n_users = table.n_users if cfg.max_users is None \
        else min(table.n_users, int(cfg.max_users))
    histories = [user_history_categories(table, item_cats, u)
                 for u in range(n_users)]
    ret = {}
    for regime in regimes:
        ret[regime.name] = [
            UserInstance(
                user=table.users[u],
                inst=build_instance(
                    dist, interpolate_probs(pred[u], value_range, regime),
                    categories=item_cats),
                history=histories[u],
            )
            for u in range(n_users)
        ]
    return ret


def _load_ir(cfg: ExperimentConfig,
             regimes: Sequence[RegimeSpec]
             ) -> Dict[str, List[UserInstance]]:
    relevance = load_relevance(cfg.relevance, cfg.delimiter)
    features = load_features(cfg.features, cfg.delimiter)
    all_values = [v for docs in relevance.values() for v in docs.values()]
    value_range = (min(all_values), max(all_values))

    queries = list(relevance)
    if cfg.max_users is not None:
        queries = queries[:int(cfg.max_users)]
    built = []
    for q in queries:
        docs = list(relevance[q])
        missing = [d for d in docs if d not in features]
        if missing:
            raise DimensionMismatch(f'No feature vector for document '
                                    f'{missing[0]!r} of query {q!r}.')
        x = np.stack([features[d] for d in docs], axis=0)
        values = np.asarray([relevance[q][d] for d in docs])
        built.append((q, cosine_distances(x), values, x))

    ret = {}
    for regime in regimes:
        ret[regime.name] = [
            UserInstance(
                user=q,
                inst=build_instance(
                    dist, interpolate_probs(values, value_range, regime),
                    features=x, with_metric_report=True),
            )
            for q, dist, values, x in built
        ]
    return ret


def load_instances(cfg: ExperimentConfig,
                   args: Optional[ExperimentArgs] = None
                   ) -> Dict[str, List[UserInstance]]:
    """Build the per-user (or per-query) instances of each regime."""
    if args is None:
        args = validate_experiment_config(cfg)
    if args.dataset_kind == DatasetKind.REC:
        return _load_rec(cfg, args.regimes)
    return _load_ir(cfg, args.regimes)


# ---- ranking and scoring ----
_BEST_K = {'b2i': 2, 'b3i': 3, 'b4i': 4, 'b3i-h': 3, 'b4i-h': 4}


def rank_items(name: str,
               inst: Instance,
               baseline: Mapping[str, Any],
               candidate_cap: int = 100) -> Ordering:
    """
    Rank the items of `inst` with the algorithm called `name`.

    Args:
        name: One of :obj:`ALGORITHM_NAMES`.
        inst: The instance.
        baseline: Field values of :class:`BaselineConfig` (``lambda_``,
            ``seed``, and the ``explore_*`` fields).
        candidate_cap: The candidate set size of ``b3i-h`` and ``b4i-h``.
    """
    if name == 'random':
        return random_rank(inst, seed=int(baseline.get('seed', 0)))
    if name == 'explore':
        return explore_rank(inst, BaselineConfig(**baseline))
    if name == 'dum':
        return dum_rank(inst)
    if name in LAMBDA_RANKERS:
        return LAMBDA_RANKERS[name](inst, BaselineConfig(**baseline))
    if name in _BEST_K:
        if name.endswith('-h'):
            return best_k_items_heuristic(
                inst, kappa=_BEST_K[name], candidate_cap=candidate_cap)
        return best_k_items(inst, kappa=_BEST_K[name])
    if name == 'bkm':
        return greedy_matching_rank(inst)
    if name == 'greedy':
        return greedy_rank(inst)
    if name == 'coverage-greedy':
        return coverage_greedy_rank(inst)
    raise ConfigValidationError(f'Unknown algorithm: {name!r}')


def score_ordering(metric: str,
                   inst: Instance,
                   ordering: Ordering,
                   history: Optional[AbstractSet[Hashable]] = None) -> float:
    """
    Evaluate one of :obj:`METRIC_NAMES` on `ordering`, except ``seconds``,
    which is measured around the ranking call.
    """
    if metric == 'osd':
        return osd(inst, ordering)
    if metric == 'ocd':
        return ocd(inst, ordering)
    probs = inst.probs[ordering.perm]
    if metric == 'expdcg':
        return exp_dcg(probs)
    if metric == 'expnum':
        return exp_num(probs)
    if metric == 'expserendipity':
        flags = novelty_flags([inst.categories[i] for i in ordering.perm],
                              history or frozenset())
        return exp_serendipity(probs, flags)
    raise ConfigValidationError(f'Unknown metric: {metric!r}')


class _UserTask(NamedTuple):
    dataset: str
    regime: str
    position: int
    instance: UserInstance
    algorithms: Tuple[str, ...]
    metrics: Tuple[str, ...]
    baseline: Mapping[str, Any]
    lambdas: Mapping[str, float]
    candidate_cap: int
    mc_samples: int


def _evaluate_user(task: _UserTask) -> Tuple[List[Mapping[str, Any]],
                                             List[str]]:
    user, inst = task.instance.user, task.instance.inst
    rows, notes = [], []
    # each user gets its own stream of random numbers
    seed = int(task.baseline.get('seed', 0)) + task.position
    baseline = dict(task.baseline, seed=seed)

    def emit(algorithm, metric, value):
        rows.append(frozendict(
            dataset=task.dataset, regime=task.regime, user=user,
            algorithm=algorithm, metric=metric, value=float(value)))

    try:
        for name in task.algorithms:
            if name in _BEST_K and inst.n < _BEST_K[name]:
                notes.append(f'{task.regime}/{user}: {name} skipped, only '
                             f'{inst.n} items.')
                continue
            if name in task.lambdas:
                baseline['lambda_'] = task.lambdas[name]
            start = time.perf_counter()
            ordering = rank_items(name, inst, baseline, task.candidate_cap)
            seconds = time.perf_counter() - start
            for metric in task.metrics:
                if metric == 'seconds':
                    emit(name, metric, seconds)
                else:
                    emit(name, metric, score_ordering(
                        metric, inst, ordering, task.instance.history))
            if task.mc_samples > 0:
                emit(name, 'osd_mc', monte_carlo_osd(
                    inst, ordering, task.mc_samples, seed).mean)
    except Exception as ex:
        raise UserContextError(user, ex) from ex

    if 'expserendipity' in task.metrics and task.instance.history is not None:
        all_cats = set().union(*inst.categories)
        if all_cats <= set(task.instance.history):
            notes.append(f'{task.regime}/{user}: history covers all '
                         f'categories, expserendipity is 0.')
    return rows, notes


def aggregate_rows(rows: Iterable[Mapping[str, Any]]
                   ) -> Tuple[Mapping[str, Any], ...]:
    """Mean and population std of the per-user values."""
    frame = pd.DataFrame(list(rows), columns=list(PER_USER_COLUMNS))
    if frame.empty:
        return ()
    keys = ['dataset', 'regime', 'algorithm', 'metric']
    grouped = frame.groupby(keys, sort=False)['value']
    ret = []
    for key, values in grouped:
        values = values.values.astype(np.float64)
        ret.append(frozendict(
            zip(keys, key),
            mean=float(np.mean(values)),
            std=float(np.std(values)),
            n_users=int(len(values)),
        ))
    return tuple(ret)


def _tune(instances: Sequence[UserInstance],
          args: ExperimentArgs,
          cfg: ExperimentConfig,
          baseline: Mapping[str, Any]) -> Dict[str, Any]:
    subset = [ui.inst for ui in instances[:int(cfg.tune_users)]]
    ret = {}
    for name in args.algorithms:
        if name in LAMBDA_ALGORITHMS:
            tuned = tune_lambda(subset, name, args.lambda_grid,
                                BaselineConfig(**baseline))
            ret[name] = {'best_lambda': tuned.best_lambda,
                         'scores': [list(s) for s in tuned.scores]}
    return ret


def run_experiment(cfg: ExperimentConfig,
                   printer: Optional[Callable[[str], Any]] = print
                   ) -> RankReport:
    """
    Run the benchmark: for every regime, tune the λ of the trade-off
    baselines on the first `tune_users` users, then rank the items of every
    user with every algorithm, and score every metric.  The tables are
    written into `cfg.out`.

    Raises:
        ConfigValidationError: If the configuration is invalid.
        UserContextError: If ranking the items of some user fails.
    """
    args = validate_experiment_config(cfg)
    instances = load_instances(cfg, args)

    if printer is not None:
        datasets = []
        for regime, users in instances.items():
            n_items = users[0].inst.n if users else 0
            avg = float(np.mean([u.inst.avg_distance() for u in users])) \
                if users else 0.
            datasets.append((f'{cfg.dataset_name}/{regime}', len(users),
                             n_items, avg))
        print_experiment_summary(cfg, datasets, printer=printer)

    baseline = {
        'seed': int(cfg.seed),
        'explore_alpha': float(cfg.explore_alpha),
        'explore_k': int(cfg.explore_k),
        'explore_steps': int(cfg.explore_steps),
        'explore_adaptation': args.explore_adaptation.value,
    }

    rows, notes, tuning = [], [], {}
    for regime, users in instances.items():
        if not users:
            continue
        tuning[regime] = _tune(users, args, cfg, baseline)
        lambdas = {k: v['best_lambda'] for k, v in tuning[regime].items()}
        if lambdas:
            mltk.print_with_time(f'[{regime}] tuned λ: {lambdas}')

        tasks = [
            _UserTask(dataset=cfg.dataset_name, regime=regime, position=i,
                      instance=ui, algorithms=args.algorithms,
                      metrics=args.metrics, baseline=baseline,
                      lambdas=lambdas, candidate_cap=int(cfg.candidate_cap),
                      mc_samples=int(cfg.mc_samples))
            for i, ui in enumerate(users)
        ]
        if int(cfg.workers) > 1:
            with ProcessPoolExecutor(max_workers=int(cfg.workers)) as pool:
                results = list(pool.map(_evaluate_user, tasks, chunksize=8))
        else:
            results = []
            for i, task in enumerate(tasks, 1):
                results.append(_evaluate_user(task))
                if i % 50 == 0 or i == len(tasks):
                    mltk.print_with_time(f'[{regime}] {i}/{len(tasks)} '
                                         f'users ranked')
        for r, n in results:
            rows.extend(r)
            notes.extend(n)

    report = RankReport(rows=tuple(rows), aggregates=aggregate_rows(rows),
                        tuning=frozendict(tuning), notes=tuple(notes))
    emit_tables(report, cfg.out, args.format)
    if printer is not None:
        print_results_summary(report.aggregates, printer=printer)
    return report


# ---- output ----
def _write(frame: pd.DataFrame, path: str, fmt: TableFormat):
    if fmt == TableFormat.CSV:
        frame.to_csv(path, index=False, float_format='%.17g')
    else:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(frame.to_dict(orient='records'), f, indent=2,
                      default=_to_builtin)


def emit_tables(report: RankReport,
                out_dir: str,
                fmt: Union[str, TableFormat] = TableFormat.CSV
                ) -> Dict[str, str]:
    """
    Write the per-user and the aggregate tables in `fmt`, plus
    ``aggregate.json`` and ``tuning.json``.

    Returns:
        The written paths, keyed by ``'per_user'``, ``'aggregate'``,
        ``'aggregate_json'`` and ``'tuning'``.
    """
    fmt = TableFormat(fmt) if not isinstance(fmt, TableFormat) else fmt
    os.makedirs(out_dir, exist_ok=True)
    ext = fmt.value
    paths = {
        'per_user': os.path.join(out_dir, f'per_user.{ext}'),
        'aggregate': os.path.join(out_dir, f'aggregate.{ext}'),
        'aggregate_json': os.path.join(out_dir, 'aggregate.json'),
        'tuning': os.path.join(out_dir, 'tuning.json'),
    }
    per_user = pd.DataFrame([dict(r) for r in report.rows],
                            columns=list(PER_USER_COLUMNS))
    aggregate = pd.DataFrame([dict(r) for r in report.aggregates],
                             columns=list(AGGREGATE_COLUMNS))
    _write(per_user, paths['per_user'], fmt)
    _write(aggregate, paths['aggregate'], fmt)
    if fmt != TableFormat.JSON:
        _write(aggregate, paths['aggregate_json'], TableFormat.JSON)

    with open(paths['tuning'], 'w', encoding='utf-8') as f:
        json.dump({'tuning': _plain(report.tuning),
                   'notes': list(report.notes)}, f, indent=2)
    return paths


def _to_builtin(obj):
    # older pandas keep the numpy scalar types in `to_dict`
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f'Not JSON serializable: {obj!r}')


def _plain(obj):
    if isinstance(obj, Mapping):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def read_table(path: str) -> pd.DataFrame:
    """Read back a table written by :func:`emit_tables`."""
    if path.endswith('.json'):
        with open(path, 'r', encoding='utf-8') as f:
            return pd.DataFrame(json.load(f))
    return pd.read_csv(path, dtype={'user': str})
