import pickle

from seqdiv import *
from tests.helper import *


class ErrorsTestCase(TestCase):

    def test_hierarchy(self):
        for cls in (DimensionMismatch, AsymmetricDistance, NonzeroDiagonal,
                    NegativeDistance, ProbabilityOutOfRange, InvalidOrdering,
                    MissingCategories, TooFewItems, DegenerateProbability,
                    KappaOutOfRange, NonUniformProbsInUniformMode,
                    InstanceTooLarge, ParseError, DuplicateRating, EmptyTable,
                    DegenerateRange, EmptyCategorySet, ZeroNormVector,
                    ConfigValidationError):
            self.assertTrue(issubclass(cls, SeqDivError))
            self.assertTrue(issubclass(cls, ValueError))
        self.assertTrue(issubclass(KernelBreakdown, ArithmeticError))
        self.assertTrue(issubclass(UserContextError, SeqDivError))
        self.assertTrue(issubclass(NonMetricWarning, UserWarning))

    def test_messages(self):
        err = TooFewItems(1, what='greedy_rank')
        self.assertEqual(str(err), 'greedy_rank requires at least 2 items: '
                                   'got 1 item(s).')
        self.assertEqual((err.n, err.minimum), (1, 2))

        err = ParseError(3, 'bad rating')
        self.assertEqual(str(err), 'line 3: bad rating')
        self.assertEqual(err.line, 3)

        err = DuplicateRating('u1', 'i2', line=5)
        self.assertEqual(str(err), "Duplicated rating for user 'u1' and "
                                   "item 'i2' at line 5.")
        self.assertEqual(str(DuplicateRating('u1', 'i2')),
                         "Duplicated rating for user 'u1' and item 'i2'.")

        err = InstanceTooLarge(12, 10)
        self.assertEqual(err.n, 12)
        self.assertIn('at most 10 items', str(err))

    def test_user_context_error(self):
        err = UserContextError('u7', KernelBreakdown('pivot is zero'))
        self.assertEqual(err.user, 'u7')
        self.assertEqual(err.cause_type, 'KernelBreakdown')
        self.assertEqual(err.cause_message, 'pivot is zero')
        self.assertEqual(str(err), "Error while processing user 'u7': "
                                   "KernelBreakdown: pivot is zero")

        err2 = pickle.loads(pickle.dumps(err))
        self.assertIsInstance(err2, UserContextError)
        self.assertEqual(err2.user, 'u7')
        self.assertEqual(err2.cause_type, 'KernelBreakdown')
        self.assertEqual(str(err2), str(err))

        err = UserContextError(3, 'something wrong')
        self.assertEqual(err.cause_type, 'Exception')
