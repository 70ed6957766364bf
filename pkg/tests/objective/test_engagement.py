import numpy as np
import pytest

from seqdiv import *
from tests.helper import *


def direct_sum(probs, gains):
    # sum_j (sum_{t<=j} gains_t) (1 - p_{j+1}) prod_{t<=j} p_t, p_{n+1} := 0
    n = len(probs)
    ret = 0.
    for j in range(n):
        next_p = probs[j + 1] if j + 1 < n else 0.
        ret += sum(gains[:j + 1]) * (1. - next_p) * np.prod(probs[:j + 1])
    return ret


class EngagementTestCase(TestCase):

    def test_exp_dcg(self):
        assert_allclose(exp_dcg([.3]), .09)
        self.assertEqual(exp_dcg([0., 0., 0.]), 0.)
        self.assertEqual(exp_dcg([]), 0.)
        for _ in range(10):
            probs = np.random.uniform(size=[3])
            gains = probs / np.log2(np.arange(2, 5))
            assert_allclose(exp_dcg(probs), direct_sum(probs, gains),
                            rtol=1e-12)

    def test_exp_serendipity(self):
        probs = np.random.uniform(size=[5])
        self.assertEqual(exp_serendipity(probs, [False] * 5), 0.)
        assert_allclose(exp_serendipity(probs, [True] * 5),
                        direct_sum(probs, probs), rtol=1e-12)
        flags = [True, False, True, True, False]
        assert_allclose(exp_serendipity(probs, flags),
                        direct_sum(probs, probs * flags), rtol=1e-12)
        assert_allclose(exp_serendipity([.4], [True]), .16)
        with pytest.raises(DimensionMismatch,
                           match='`novelty` must have the same length'):
            _ = exp_serendipity(probs, [True])

    def test_exp_num(self):
        self.assertEqual(exp_num([1., 1., 1., 1.]), 4.)
        assert_allclose(exp_num([.5, .5]), .75)
        self.assertEqual(exp_num([0., 0.]), 0.)

        # E|A| via the acceptance law
        inst = random_metric_instance(6)
        o = identity_ordering(6)
        law = acceptance_probabilities(inst, o)
        assert_allclose(exp_num(inst.probs),
                        np.dot(law, np.arange(7)), rtol=1e-12)

    def test_novelty_flags(self):
        flags = novelty_flags([{'a'}, {'a', 'c'}, set(), {'d'}],
                              {'a', 'b'})
        assert_equal(flags, [False, True, False, True])
