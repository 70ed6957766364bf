from seqdiv.bench import ExperimentConfig
from seqdiv.utils.misc import *
from tests.helper import *


class MiscTestCase(TestCase):

    def test_print_experiment_summary(self):
        lines = []
        print_experiment_summary(
            ExperimentConfig(dataset_name='coat'),
            [('coat/medium', 290, 300, 0.8125)],
            printer=lines.append,
        )
        text = '\n'.join(lines)
        self.assertIn('coat', text)
        self.assertIn('Datasets', text)
        self.assertIn('290 instances, 300 items, avg(dist) 0.8125', text)

        # no dataset
        lines = []
        print_experiment_summary(ExperimentConfig(), [], printer=lines.append)
        self.assertNotIn('Datasets', '\n'.join(lines))

    def test_print_results_summary(self):
        lines = []
        print_results_summary(
            [{'regime': 'medium', 'algorithm': 'b2i', 'metric': 'osd',
              'mean': 1.5, 'std': 0.25},
             {'regime': 'medium', 'algorithm': 'random', 'metric': 'osd',
              'mean': 10., 'std': 0.}],
            printer=lines.append,
        )
        text = '\n'.join(lines)
        self.assertIn('Results', text)
        self.assertIn('medium/b2i/osd', text)
        self.assertIn(' 1.5000 ± 0.2500', text)
        self.assertIn('10.0000 ± 0.0000', text)

        lines = []
        print_results_summary([], printer=lines.append)
        self.assertEqual(lines, [])
