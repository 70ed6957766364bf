import itertools

import numpy as np
import pytest

from seqdiv import *
from tests.helper import *


class AcceptanceLawTestCase(TestCase):

    def test_acceptance_probabilities(self):
        inst = build_instance(np.zeros([3, 3]), [.5, .4, 1.])
        assert_allclose(acceptance_probabilities(inst, [0, 1, 2]),
                        [.5, .3, 0., .2])
        assert_allclose(acceptance_probabilities(inst, [2, 0, 1]),
                        [0., .5, .3, .2])
        assert_allclose(acceptance_probabilities(inst, []), [1.])

        for n in (1, 2, 5, 9):
            inst = random_metric_instance(n)
            for o in random_orderings(n, 10):
                law = acceptance_probabilities(inst, o)
                self.assertEqual(len(law), n + 1)
                self.assertTrue(np.all(law >= 0.))
                assert_allclose(np.sum(law), 1., rtol=0, atol=1e-12)

    def test_edge_weights(self):
        inst = build_instance(np.zeros([2, 2]), [.5, .4])
        assert_allclose(edge_weights(inst, [0, 1]).w, [.2])
        self.assertEqual(len(edge_weights(inst, [0]).w), 0)

        # uniform probabilities: W_{O_i} = (p^{i+1} - p^{n+1}) / (1 - p)
        for n, p in [(5, .3), (8, .8)]:
            inst = random_uniform_instance(n, p)
            w = edge_weights(inst, identity_ordering(n)).w
            i = np.arange(1, n)
            assert_allclose(w, (p ** (i + 1) - p ** (n + 1)) / (1. - p),
                            rtol=1e-12)

        inst = random_metric_instance(7)
        for o in random_orderings(7, 10):
            w = edge_weights(inst, o).w
            self.assertTrue(np.all(np.diff(w) <= 0.))


class OsdTestCase(TestCase):

    def test_example1(self):
        inst = example1_instance()
        expected = {
            (0, 1, 2): .3, (0, 2, 1): 0., (1, 0, 2): .3,
            (1, 2, 0): 0., (2, 0, 1): 0., (2, 1, 0): 0.,
        }
        for o, v in expected.items():
            assert_allclose(osd(inst, o), v, atol=1e-12)
            assert_allclose(osd_definitional(inst, o), v, atol=1e-12)

    def test_trivial(self):
        inst = build_instance([[0.]], [.7])
        self.assertEqual(osd(inst, [0]), 0.)
        self.assertEqual(osd_definitional(inst, [0]), 0.)

        # n = 2: p1 * p2 * d
        inst = build_instance([[0., 3.], [3., 0.]], [.5, .4])
        assert_allclose(osd(inst, [1, 0]), .5 * .4 * 3.)

        # zero distances
        inst = build_instance(np.zeros([4, 4]), [.5] * 4)
        self.assertEqual(osd(inst, identity_ordering(4)), 0.)

    def test_closed_form_equals_definition(self):
        for _ in range(500):
            n = np.random.randint(1, 11)
            inst = random_metric_instance(n, p_range=(0., 1.))
            o = Ordering(np.random.permutation(n))
            assert_allclose(osd(inst, o), osd_definitional(inst, o),
                            rtol=0, atol=1e-9)

    def test_twice_osd_bounds_ohp(self):
        for _ in range(100):
            n = np.random.randint(2, 9)
            inst = random_metric_instance(n)
            for o in random_orderings(n, 5):
                self.assertGreaterEqual(2. * osd(inst, o) + 1e-12,
                                        ohp(inst, o))

    def test_invalid_ordering(self):
        with pytest.raises(InvalidOrdering):
            _ = osd(example1_instance(), [0, 0, 1])


class OcdTestCase(TestCase):

    def test_trivial(self):
        inst = build_instance(np.zeros([3, 3]), [0.] * 3,
                              categories=[{1}, {2}, {3}])
        self.assertEqual(ocd(inst, [0, 1, 2]), 0.)

        inst = build_instance([[0.]], [.3], categories=[{'a', 'b', 'c'}])
        assert_allclose(ocd(inst, [0]), .9)

        with pytest.raises(MissingCategories):
            _ = ocd(example1_instance(), [0, 1, 2])

    def test_against_enumeration(self):
        for _ in range(20):
            inst = random_category_instance(6)
            for o in random_orderings(6, 5):
                perm = o.tolist()
                expected = 0.
                for k in range(7):
                    pr = np.prod(inst.probs[perm[:k]])
                    if k < 6:
                        pr *= 1. - inst.probs[perm[k]]
                    covered = set()
                    for i in perm[:k]:
                        covered.update(inst.categories[i])
                    expected += pr * len(covered)
                assert_allclose(ocd(inst, o), expected, rtol=1e-12)


class OhpTestCase(TestCase):

    def test_trivial(self):
        inst = build_instance([[0., 3.], [3., 0.]], [.5, .4])
        assert_allclose(ohp(inst, [0, 1]), .5 * .4 * 3.)

        with pytest.raises(TooFewItems,
                           match='requires at least 2 items: got 1'):
            _ = ohp(build_instance([[0.]], [.5]), [0])

    def test_path_prefix_form(self):
        for _ in range(20):
            n = np.random.randint(2, 9)
            inst = random_metric_instance(n)
            for o in random_orderings(n, 5):
                perm = o.tolist()
                cum = prefix_products(inst, o).cum
                expected = 0.
                for j in range(1, n):
                    path = sum(inst.dist[perm[i], perm[i + 1]]
                               for i in range(j))
                    expected += cum[j] * path
                assert_allclose(ohp(inst, o), expected, rtol=1e-12)


class SurrogateTestCase(TestCase):

    def test_ell_hat(self):
        inst = build_instance([[0., 2.], [2., 0.]], [.5, .5])
        assert_allclose(ell_hat(inst, [0, 1]), .25 / .5 * 2.)

        # kappa = 3, p = 0.5, unit distances
        inst = build_instance(1. - np.eye(3), [.5] * 3)
        assert_allclose(ell_hat(inst, [0, 1, 2]), .75)
        assert_allclose(ell_hat(inst, [0, 1, 2], p=.5), .75)

        # linearity in the distances
        inst = random_uniform_instance(6, .4)
        inst2 = build_instance(3. * inst.dist, inst.probs)
        for o in random_orderings(6, 5):
            assert_allclose(ell_hat(inst2, o.prefix(4)),
                            3. * ell_hat(inst, o.prefix(4)), rtol=1e-12)

        with pytest.raises(DegenerateProbability,
                           match=r'`p` must be in \(0, 1\)'):
            _ = ell_hat(inst, [0, 1], p=1.)
        with pytest.raises(DegenerateProbability):
            _ = ell_hat(build_instance(1. - np.eye(2), [0., 0.]), [0, 1])
        with pytest.raises(NonUniformProbsInUniformMode):
            _ = ell_hat(example1_instance(), [0, 1])
        with pytest.raises(TooFewItems):
            _ = ell_hat(inst, [0])

    def test_ell_tilde(self):
        inst = build_instance([[0., 2.], [2., 0.]], [.5, .4])
        assert_allclose(ell_tilde(inst, [1, 0]), .5 * .4 * 2.)
        self.assertEqual(
            ell_tilde(build_instance(np.zeros([3, 3]), [.5] * 3), [0, 1, 2]),
            0.
        )
        with pytest.raises(TooFewItems):
            _ = ell_tilde(inst, [0])

        # direct double sum
        inst = random_metric_instance(7)
        for perm in itertools.islice(itertools.permutations(range(7), 4), 50):
            cum = np.cumprod(inst.probs[list(perm)])
            expected = sum(
                np.sum(cum[i + 1:]) * inst.dist[perm[i], perm[i + 1]]
                for i in range(3)
            )
            assert_allclose(ell_tilde(inst, perm), expected, rtol=1e-12)

    def test_ell_tilde_uniform_relation(self):
        # with uniform p, the two surrogates differ only by the tail terms
        p = .6
        inst = random_uniform_instance(6, p)
        for o in random_orderings(6, 10):
            prefix = o.prefix(4)
            edges = inst.dist[prefix[:-1], prefix[1:]]
            tail = sum(p ** 5 / (1. - p) * e for e in edges)
            assert_allclose(ell_tilde(inst, prefix),
                            ell_hat(inst, prefix) - tail, rtol=1e-10)


class AppendGainsTestCase(TestCase):

    def test_osd_gains(self):
        inst = random_metric_instance(7)
        for o in random_orderings(7, 10):
            prefix = o.prefix(3)
            rest = o.perm[3:]
            gains = osd_gains(inst, prefix)
            candidates = np.setdiff1d(np.arange(7), prefix)
            for v, g in zip(candidates, gains):
                expected = prefix_osd(inst, list(prefix) + [v]) - \
                    prefix_osd(inst, prefix)
                assert_allclose(g, expected, rtol=1e-10, atol=1e-14)
            assert_allclose(osd_gain(inst, prefix, rest[0]),
                            osd_gains(inst, prefix, [rest[0]])[0])

        # empty prefix
        assert_equal(osd_gains(inst, []), np.zeros([7]))

    def test_ocd_gains(self):
        inst = random_category_instance(7)
        for o in random_orderings(7, 10):
            prefix = o.prefix(3)
            gains = ocd_gains(inst, prefix)
            candidates = np.setdiff1d(np.arange(7), prefix)
            for v, g in zip(candidates, gains):
                expected = prefix_ocd(inst, list(prefix) + [v]) - \
                    prefix_ocd(inst, prefix)
                assert_allclose(g, expected, rtol=1e-10, atol=1e-14)
            assert_allclose(ocd_gain(inst, prefix, o[3]),
                            ocd_gains(inst, prefix, [o[3]])[0])

        # empty prefix: p_v * |C(v)|
        sizes = np.asarray([len(c) for c in inst.categories])
        assert_allclose(ocd_gains(inst, []), inst.probs * sizes)

    def test_distance_to_prefix(self):
        inst = example1_instance()
        assert_allclose(distance_to_prefix(inst, np.array([0, 1, 2])),
                        [0., .3, 2.])
