import numpy as np
import pytest

from seqdiv import *
from tests.helper import *


class SimulationTestCase(TestCase):

    def test_accepted_lengths(self):
        inst = example1_instance()
        assert_equal(simulate_accepted_lengths(inst, [0, 1, 2], 100),
                     np.full([100], 2))
        assert_equal(simulate_accepted_lengths(inst, [2, 0, 1], 10),
                     np.zeros([10]))

        inst = random_metric_instance(5)
        lengths = simulate_accepted_lengths(inst, identity_ordering(5),
                                            20000, seed=1)
        self.assertTrue(np.all((lengths >= 0) & (lengths <= 5)))
        # E|A| = sum of the prefix products
        self.assertLess(abs(np.mean(lengths) - exp_num(inst.probs)), .05)

        assert_equal(
            simulate_accepted_lengths(inst, identity_ordering(5), 50, seed=3),
            simulate_accepted_lengths(inst, identity_ordering(5), 50, seed=3)
        )

    def test_monte_carlo_osd(self):
        # the user accepts everything
        inst = build_instance(random_metric_dist(5), [1.] * 5)
        ret = monte_carlo_osd(inst, identity_ordering(5), 100)
        assert_allclose(ret.mean, div_sum(inst, range(5)))
        self.assertEqual(ret.stderr, 0.)
        self.assertEqual((ret.samples, ret.seed), (100, 0))

        ret = monte_carlo_osd(example1_instance(), [0, 1, 2], 1)
        assert_allclose(ret.mean, .3)
        self.assertEqual(ret.stderr, 0.)

        inst = random_metric_instance(6)
        o = random_orderings(6, 1)[0]
        ret = monte_carlo_osd(inst, o, 20000, seed=123)
        self.assertGreater(ret.stderr, 0.)
        self.assertLess(abs(ret.mean - osd(inst, o)), 4. * ret.stderr)

        with pytest.raises(ValueError, match='`samples` must be at least 1'):
            _ = monte_carlo_osd(inst, o, 0)

    @slow_test
    def test_monte_carlo_osd_agrees_with_closed_form(self):
        within = 0
        for seed in range(20):
            inst = random_metric_instance(6)
            o = random_orderings(6, 1)[0]
            ret = monte_carlo_osd(inst, o, 100000, seed=seed)
            self.assertGreater(ret.stderr, 0.)
            if abs(ret.mean - osd(inst, o)) <= 4. * ret.stderr:
                within += 1
        self.assertGreaterEqual(within, 19)
