import numpy as np
import pytest

from seqdiv import *
from seqdiv.data import *
from tests.helper import *


class RegimesTestCase(TestCase):

    def test_get_regime(self):
        self.assertEqual(get_regime('small'), RegimeSpec('small', .1, .3))
        self.assertEqual(get_regime(RegimeName.LARGE),
                         RegimeSpec('large', .7, .9))
        self.assertEqual(get_regime('FULL'), REGIMES['full'])
        regime = RegimeSpec('custom', .2, .25)
        self.assertIs(get_regime(regime), regime)
        with pytest.raises(ConfigValidationError,
                           match='`regime` must be one of'):
            _ = get_regime('huge')

    def test_interpolate_probs(self):
        ratings = np.random.uniform(1., 5., size=[1000])
        ratings[:2] = [1., 5.]
        for name, regime in REGIMES.items():
            probs = interpolate_probs(ratings, (1., 5.), name)
            self.assertEqual(probs[0], regime.lo)
            self.assertEqual(probs[1], regime.hi)
            self.assertTrue(np.all((probs >= regime.lo) & (probs <= regime.hi)))
            # monotone
            order = np.argsort(ratings)
            self.assertTrue(np.all(np.diff(probs[order]) >= 0.))

        # out-of-range values are clipped
        assert_equal(interpolate_probs([0., 6.], (1., 5.), 'large'), [.7, .9])
        assert_allclose(interpolate_probs([3.], (1., 5.), 'full'), [.5])

        with pytest.raises(DegenerateRange):
            _ = interpolate_probs([1.], (3., 3.), 'small')

    def test_normalize_watch_ratio(self):
        assert_allclose(normalize_watch_ratio([.5, 1., 2.5]), [1., 2., 5.])
        with pytest.raises(DegenerateRange):
            _ = normalize_watch_ratio([1., 1.])
