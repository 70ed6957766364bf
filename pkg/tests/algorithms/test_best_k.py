import itertools

import numpy as np
import pytest

from seqdiv import *
from tests.helper import *


class IterOrderedTuplesTestCase(TestCase):

    def test_iter_ordered_tuples(self):
        for m, k in [(4, 1), (4, 2), (5, 3), (6, 6)]:
            candidates = np.random.permutation(10)[:m]
            expected = list(itertools.permutations(sorted(candidates), k))
            for chunk_size in (1, 7, 1000):
                rows = np.concatenate(list(iter_ordered_tuples(
                    candidates, k, chunk_size=chunk_size)), axis=0)
                self.assertEqual([tuple(r) for r in rows.tolist()], expected)

        # chunking bounds the batch size
        for rows in iter_ordered_tuples(range(7), 4, chunk_size=30):
            self.assertLessEqual(len(rows), 30)

        # consecutive heads share a batch: 8 * 7 heads of 6 completions,
        # three heads per batch of at most 20 rows
        batches = list(iter_ordered_tuples(range(8), 3, chunk_size=20))
        self.assertEqual(len(batches), 19)
        self.assertEqual([len(b) for b in batches], [18] * 18 + [12])
        rows = np.concatenate(batches, axis=0)
        self.assertEqual([tuple(r) for r in rows.tolist()],
                         list(itertools.permutations(range(8), 3)))

        # a large instance needs few batches
        batches = iter_ordered_tuples(range(60), 3, chunk_size=10000)
        sizes = [len(b) for b in batches]
        self.assertEqual(sum(sizes), 60 * 59 * 58)
        self.assertEqual(len(sizes), 30)

        # fewer candidates than kappa
        self.assertEqual(list(iter_ordered_tuples([0, 1], 3)), [])


class BestKItemsTestCase(TestCase):

    def test_example1(self):
        inst = example1_instance()
        self.assertEqual(best_k_items(inst, kappa=2), [0, 1, 2])
        row, score = search_best_prefix(inst, 2)
        assert_equal(row, [0, 1])
        assert_allclose(score, .3)

    def test_against_exhaustive_surrogate(self):
        for _ in range(10):
            n = np.random.randint(3, 8)
            kappa = np.random.randint(2, min(n, 4) + 1)
            inst = random_metric_instance(n)
            expected = brute_force_surrogate(inst, kappa)
            o = best_k_items(inst, kappa=kappa)
            assert_allclose(ell_tilde(inst, o.prefix(kappa)),
                            expected.best_score, rtol=1e-12)

            p = np.random.uniform(.1, .9)
            inst = random_uniform_instance(n, p)
            expected = brute_force_surrogate(inst, kappa, 'uniform')
            o = best_k_items(inst, kappa=kappa, mode='uniform')
            assert_allclose(ell_hat(inst, o.prefix(kappa)),
                            expected.best_score, rtol=1e-12)

        # kappa = n
        inst = random_metric_instance(6)
        expected = brute_force_surrogate(inst, 6)
        o = best_k_items(inst, kappa=6)
        assert_allclose(ell_tilde(inst, o), expected.best_score, rtol=1e-12)

    def test_ties(self):
        # all items identical: the lexicographically-first prefix wins
        inst = build_instance(1. - np.eye(5), [.5] * 5)
        for kappa in (2, 3, 4):
            self.assertEqual(best_k_items(inst, kappa=kappa),
                             identity_ordering(5))
            self.assertEqual(
                best_k_items(inst, kappa=kappa, mode='uniform'),
                identity_ordering(5)
            )

    def test_extension(self):
        inst = random_metric_instance(7)
        o = best_k_items(inst, kappa=3, extension='arbitrary')
        prefix = o.prefix(3)
        assert_equal(o.perm[3:], np.setdiff1d(np.arange(7), prefix))

        o2 = best_k_items(inst, kappa=3)
        assert_equal(o2.prefix(3), prefix)
        self.assertEqual(o2, greedy_extend(inst, prefix))

    def test_greedy_extend(self):
        inst = random_metric_instance(7)
        prefix = [4, 1]
        o = greedy_extend(inst, prefix)
        perm = list(prefix)
        while len(perm) < 7:
            rest = [v for v in range(7) if v not in perm]
            gains = [prefix_osd(inst, perm + [v]) - prefix_osd(inst, perm)
                     for v in rest]
            perm.append(rest[int(np.argmax(gains))])
        self.assertEqual(o, perm)

    def test_config(self):
        inst = random_metric_instance(5)
        cfg = BkeConfig(kappa=3)
        self.assertEqual(best_k_items(inst, cfg), best_k_items(inst, kappa=3))
        self.assertEqual(best_k_items(inst, cfg, extension='arbitrary'),
                         best_k_items(inst, kappa=3, extension='arbitrary'))

        args = validate_bke_config(BkeConfig(kappa=2, mode='uniform',
                                             candidate_cap=4), 5)
        self.assertEqual(args.kappa, 2)
        self.assertEqual(args.mode, ProbabilityMode.UNIFORM)
        self.assertEqual(args.extension, ExtensionMode.GREEDY)
        self.assertEqual(args.candidate_cap, 4)

    def test_errors(self):
        inst = random_metric_instance(4)
        for kappa in (1, 5):
            with pytest.raises(KappaOutOfRange,
                               match=r'`kappa` must be in \[2, 4\]'):
                _ = best_k_items(inst, kappa=kappa)
        with pytest.raises(KappaOutOfRange,
                           match='`candidate_cap` must be at least `kappa`'):
            _ = best_k_items_heuristic(inst, kappa=3, candidate_cap=2)
        with pytest.raises(ConfigValidationError, match='`mode` must be'):
            _ = best_k_items(inst, mode='xyz')
        with pytest.raises(NonUniformProbsInUniformMode):
            _ = best_k_items(inst, mode='uniform')
        with pytest.raises(DegenerateProbability):
            _ = best_k_items(build_instance(1. - np.eye(3), [1.] * 3),
                             mode='uniform')


class BestKItemsHeuristicTestCase(TestCase):

    def test_heuristic(self):
        inst = random_metric_instance(8)

        # a cap covering all the items gives the exact algorithm
        for cap in (8, 20):
            self.assertEqual(
                best_k_items_heuristic(inst, kappa=3, candidate_cap=cap),
                best_k_items(inst, kappa=3)
            )

        # cap = kappa: the prefix is a rearrangement of the greedy top items
        o = best_k_items_heuristic(inst, kappa=3, candidate_cap=3)
        self.assertEqual(sorted(o.prefix(3).tolist()),
                         sorted(greedy_rank(inst).prefix(3).tolist()))

        # restricted candidates never beat the exact search
        for _ in range(10):
            inst = random_metric_instance(9)
            exact = best_k_items(inst, kappa=3).prefix(3)
            heuristic = best_k_items_heuristic(
                inst, kappa=3, candidate_cap=5).prefix(3)
            self.assertLessEqual(ell_tilde(inst, heuristic),
                                 ell_tilde(inst, exact) + 1e-12)

            # searching the sub-instance equals searching the candidates
            candidates = np.sort(greedy_rank(inst).prefix(5))
            row, _ = search_best_prefix(inst, 3, candidates=candidates)
            assert_equal(heuristic, row)

        # ties inside the sub-instance still go to the lowest item index
        inst = build_instance(1. - np.eye(6), [.5] * 6)
        o = best_k_items_heuristic(inst, kappa=2, candidate_cap=4)
        assert_equal(o.prefix(2), [0, 1])

    def test_errors(self):
        inst = random_metric_instance(5)
        with pytest.raises(ConfigValidationError,
                           match='`candidate_cap` is required'):
            _ = best_k_items_heuristic(inst, kappa=2)
        with pytest.raises(NonUniformProbsInUniformMode):
            _ = best_k_items_heuristic(inst, kappa=2, candidate_cap=3,
                                       mode='uniform')
