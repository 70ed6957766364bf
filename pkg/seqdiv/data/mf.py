from typing import *

import mltk
import numpy as np

from ..arg_check import *
from ..errors import *
from .tables import RatingsTable

__all__ = [
    'LARGE_TABLE_RATINGS', 'DENSE_TABLE_DENSITY',
    'MfConfig', 'MfModel', 'validate_mf_config', 'default_mf_factors',
    'fit_mf', 'complete_ratings_mf', 'holdout_split', 'rmse',
]


LARGE_TABLE_RATINGS = 1_000_000
DENSE_TABLE_DENSITY = 0.5


class MfConfig(mltk.Config):
    """Hyperparameters of the SGD matrix factorization."""

    factors: int = 5
    epochs: int = 50
    learning_rate: float = 0.01
    regularization: float = 0.05
    init_std: float = 0.1
    seed: int = 0


def validate_mf_config(cfg: MfConfig) -> MfConfig:
    """
    Raises:
        ConfigValidationError: If `factors` or `epochs` is not positive,
            `learning_rate` is not positive, or `regularization` is negative.
    """
    validate_positive_int('factors', cfg.factors)
    validate_positive_int('epochs', cfg.epochs)
    if not float(cfg.learning_rate) > 0.:
        raise ConfigValidationError(f'`learning_rate` must be positive: '
                                    f'got {cfg.learning_rate!r}')
    validate_non_negative_float('regularization', cfg.regularization)
    validate_non_negative_float('init_std', cfg.init_std)
    return cfg


def default_mf_factors(table: RatingsTable) -> int:
    """
    The number of latent factors to use for `table`: 10 for large (at least
    :obj:`LARGE_TABLE_RATINGS` ratings) or dense (at least
    :obj:`DENSE_TABLE_DENSITY` of the cells observed) tables, 5 otherwise.
    """
    if table.n_ratings >= LARGE_TABLE_RATINGS or \
            table.density >= DENSE_TABLE_DENSITY:
        return 10
    return 5


class MfModel(NamedTuple):
    user_factors: np.ndarray
    item_factors: np.ndarray
    rating_range: Tuple[float, float]

    def predict(self) -> np.ndarray:
        """The dense ``(n_users, n_items)`` predictions, clipped to the
        observed rating range."""
        return np.clip(self.user_factors @ self.item_factors.T,
                       *self.rating_range)


def fit_mf(table: RatingsTable, cfg: Optional[MfConfig] = None) -> MfModel:
    """
    Fit ``r_ui ~ P_u . Q_i`` by per-rating stochastic gradient descent on the
    L2-regularized squared error, visiting the ratings in a freshly shuffled
    order at each epoch.  Deterministic per `cfg.seed`.

    Raises:
        EmptyTable: If `table` has no rating.
    """
    cfg = validate_mf_config(cfg or MfConfig())
    if not table.n_ratings:
        raise EmptyTable('Cannot factorize an empty ratings table.')

    rng = np.random.default_rng(cfg.seed)
    k = int(cfg.factors)
    lr = float(cfg.learning_rate)
    reg = float(cfg.regularization)
    p = rng.normal(0., cfg.init_std, size=[table.n_users, k])
    q = rng.normal(0., cfg.init_std, size=[table.n_items, k])
    users, items, ratings = table.user_index, table.item_index, table.ratings

    for _ in range(int(cfg.epochs)):
        for t in rng.permutation(table.n_ratings):
            u, i = users[t], items[t]
            pu, qi = p[u].copy(), q[i].copy()
            err = ratings[t] - np.dot(pu, qi)
            p[u] = pu + lr * (err * qi - reg * pu)
            q[i] = qi + lr * (err * pu - reg * qi)

    return MfModel(user_factors=p, item_factors=q,
                   rating_range=table.rating_range)


def complete_ratings_mf(table: RatingsTable,
                        cfg: Optional[MfConfig] = None) -> np.ndarray:
    """
    Complete the user-item rating matrix by matrix factorization.

    Returns:
        The ``(n_users, n_items)`` estimates, clipped to the observed
        rating range.
    """
    return fit_mf(table, cfg).predict()


def holdout_split(table: RatingsTable,
                  portion: float = 0.2,
                  seed: int = 0) -> Tuple[RatingsTable, RatingsTable]:
    """
    Split the ratings into a train and a test table, holding out `portion`
    of the ratings at random, but never the last training rating of a user.
    """
    portion = validate_unit_interval('portion', portion)
    rng = np.random.default_rng(seed)
    test = rng.random(table.n_ratings) < portion
    for u in np.unique(table.user_index[test]):
        mine = table.user_index == u
        if np.all(test[mine]):
            test[np.argmax(mine)] = False
    return table.subset(~test), table.subset(test)


def rmse(predictions: np.ndarray, table: RatingsTable) -> float:
    """The root mean squared error of dense `predictions` on `table`."""
    if not table.n_ratings:
        raise EmptyTable('Cannot evaluate on an empty ratings table.')
    pred = predictions[table.user_index, table.item_index]
    return float(np.sqrt(np.mean((pred - table.ratings) ** 2)))
