from typing import *

import numpy as np
from frozendict import frozendict

from ..arg_check import validate_enum
from ..errors import *
from ..typing_ import *

__all__ = [
    'RegimeSpec', 'REGIMES', 'get_regime', 'interpolate_probs',
    'normalize_watch_ratio',
]


class RegimeSpec(NamedTuple):
    """A target interval ``[lo, hi]`` of continuation probabilities."""

    name: str
    lo: float
    hi: float


REGIMES: Mapping[str, RegimeSpec] = frozendict({
    RegimeName.SMALL.value: RegimeSpec(RegimeName.SMALL.value, 0.1, 0.3),
    RegimeName.MEDIUM.value: RegimeSpec(RegimeName.MEDIUM.value, 0.4, 0.6),
    RegimeName.LARGE.value: RegimeSpec(RegimeName.LARGE.value, 0.7, 0.9),
    RegimeName.FULL.value: RegimeSpec(RegimeName.FULL.value, 0.1, 0.9),
})


def get_regime(name: Union[str, RegimeName, RegimeSpec]) -> RegimeSpec:
    """
    Get a named regime.

    >>> get_regime('medium')
    RegimeSpec(name='medium', lo=0.4, hi=0.6)
    """
    if isinstance(name, RegimeSpec):
        return name
    return REGIMES[validate_enum('regime', name, RegimeName).value]


def interpolate_probs(values: ArrayLike,
                      value_range: Tuple[float, float],
                      regime: Union[str, RegimeSpec]) -> np.ndarray:
    """
    Map relevance values linearly from `value_range` onto the regime's
    probability interval, clipping to the interval.

    >>> interpolate_probs([1., 3., 5.], (1., 5.), 'medium').round(6).tolist()
    [0.4, 0.5, 0.6]

    Raises:
        DegenerateRange: If ``value_range[1] <= value_range[0]``.
    """
    regime = get_regime(regime)
    vmin, vmax = map(float, value_range)
    if not vmax > vmin:
        raise DegenerateRange(f'`value_range` must satisfy min < max: '
                              f'got {value_range!r}')
    values = np.asarray(values, dtype=np.float64)
    ratio = (values - vmin) / (vmax - vmin)
    ret = regime.lo + ratio * (regime.hi - regime.lo)
    # the endpoints map exactly
    ret = np.where(values <= vmin, regime.lo, ret)
    ret = np.where(values >= vmax, regime.hi, ret)
    return np.clip(ret, regime.lo, regime.hi)


def normalize_watch_ratio(values: ArrayLike) -> np.ndarray:
    """
    Min-max normalize watch ratios (or any engagement signal) onto the
    rating scale ``[1, 5]``.

    Raises:
        DegenerateRange: If all the values are equal.
    """
    values = np.asarray(values, dtype=np.float64)
    vmin, vmax = float(np.min(values)), float(np.max(values))
    if not vmax > vmin:
        raise DegenerateRange(f'Cannot normalize constant values: '
                              f'all equal to {vmin!r}')
    return 1. + 4. * (values - vmin) / (vmax - vmin)
