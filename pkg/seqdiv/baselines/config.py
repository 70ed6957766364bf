from typing import *

import mltk

from ..arg_check import *
from ..errors import *
from ..typing_ import *

__all__ = ['BaselineConfig', 'BaselineArgs', 'validate_baseline_config']


class BaselineConfig(mltk.Config):
    """Configuration shared by the baseline rankers."""

    # relevance / diversity trade-off of MMR, MSD and DPP
    lambda_: float = 0.5

    # random generator of Random and EXPLORE
    seed: int = 0

    # EXPLORE
    explore_alpha: float = 0.5
    explore_k: int = 10
    explore_steps: int = 10
    explore_adaptation: str = ExploreAdaptation.ACCEPTED_THEN_RANDOM.value


class BaselineArgs(NamedTuple):
    lambda_: float
    seed: int
    explore_alpha: float
    explore_k: int
    explore_steps: int
    explore_adaptation: ExploreAdaptation


def validate_baseline_config(cfg: Optional[BaselineConfig] = None,
                             **kwargs) -> BaselineArgs:
    """
    Validate a :class:`BaselineConfig`, with optional field overrides.

    Raises:
        ConfigValidationError: If some field is out of its range.
    """
    if cfg is None:
        cfg = BaselineConfig()
    values = {k: getattr(cfg, k) for k in BaselineArgs._fields}
    values.update(kwargs)

    alpha = float(values['explore_alpha'])
    if not alpha > 0.:
        raise ConfigValidationError(f'`explore_alpha` must be positive: '
                                    f'got {alpha!r}')
    return BaselineArgs(
        lambda_=validate_unit_interval('lambda_', values['lambda_']),
        seed=int(values['seed']),
        explore_alpha=alpha,
        explore_k=validate_positive_int('explore_k', values['explore_k']),
        explore_steps=validate_positive_int(
            'explore_steps', values['explore_steps']),
        explore_adaptation=validate_enum(
            'explore_adaptation', values['explore_adaptation'],
            ExploreAdaptation),
    )
