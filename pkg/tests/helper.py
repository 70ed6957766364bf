import os
import random
import unittest
from functools import wraps
from typing import *

import numpy as np
import pytest

from seqdiv import *

__all__ = [
    'assert_allclose', 'assert_not_allclose', 'assert_equal',
    'assert_not_equal',

    'slow_test',

    'example1_instance', 'random_metric_dist', 'random_metric_instance',
    'random_uniform_instance', 'random_category_instance',
    'random_orderings',

    'TestCase',
]


def wrap_numpy_testing_assertion_fn(fn):
    def f(t):
        if isinstance(t, Ordering):
            t = t.perm
        return t

    def wrapper(x, y, **kwargs):
        return fn(f(x), f(y), **kwargs)
    return wrapper


assert_allclose = wrap_numpy_testing_assertion_fn(np.testing.assert_allclose)


@wrap_numpy_testing_assertion_fn
def assert_not_allclose(x, y, err_msg='', **kwargs):
    if np.all(np.allclose(x, y, **kwargs)):
        msg = f'`not allclose(x, y)` not hold'
        if err_msg:
            msg += f': {err_msg}'
        msg += f'\nx = {x}\ny = {y}'
        raise AssertionError(msg)


assert_equal = wrap_numpy_testing_assertion_fn(np.testing.assert_equal)


@wrap_numpy_testing_assertion_fn
def assert_not_equal(x, y, err_msg=''):
    if np.all(np.equal(x, y)):
        msg = f'`x != y` not hold'
        if err_msg:
            msg += f': {err_msg}'
        msg += f'\nx = {x}\ny = {y}'
        raise AssertionError(msg)


# decorate a test that is slow
def slow_test(fn):
    fn = pytest.mark.skipif(
        os.environ.get('FAST_TEST', '0').lower() in ('1', 'on', 'yes', 'true'),
        reason=f'slow test: {fn}'
    )(fn)
    return fn


# instance factories, drawing from the global numpy generator (which is
# re-seeded before each test by `TestCase`)
def example1_instance() -> Instance:
    """u1, u2 at distance 0.3, both at distance 1 from u3; p = (1, 1, 0)."""
    return build_instance([[0., .3, 1.], [.3, 0., 1.], [1., 1., 0.]],
                          [1., 1., 0.])


def random_metric_dist(n: int, high: float = 2.) -> np.ndarray:
    d = np.random.uniform(0., high, size=[n, n])
    d = np.triu(d, 1)
    return metric_closure(d + d.T)


def random_metric_instance(n: int,
                           p_range: Tuple[float, float] = (0.05, 0.95),
                           **kwargs) -> Instance:
    probs = np.random.uniform(p_range[0], p_range[1], size=[n])
    return build_instance(random_metric_dist(n), probs, **kwargs)


def random_uniform_instance(n: int, p: float) -> Instance:
    return build_instance(random_metric_dist(n), np.full([n], p))


def random_category_instance(n: int,
                             n_categories: int = 6,
                             max_item_categories: int = 3,
                             probs: Optional[np.ndarray] = None,
                             p_range: Tuple[float, float] = (0.05, 0.95)
                             ) -> Instance:
    categories = []
    for _ in range(n):
        size = np.random.randint(1, max_item_categories + 1)
        categories.append(set(np.random.choice(
            n_categories, size=size, replace=False).tolist()))
    if probs is None:
        probs = np.random.uniform(p_range[0], p_range[1], size=[n])
    return build_instance(random_metric_dist(n), probs,
                          categories=categories)


def random_orderings(n: int, count: int) -> List[Ordering]:
    return [Ordering(np.random.permutation(n)) for _ in range(count)]


class TestCaseMeta(type):

    def __new__(cls, name, parents, dct):
        def make_wrapper(method):
            @wraps(method)
            def wrapper(*args, **kwargs):
                np.random.seed(1234)
                random.seed(1234)
                return method(*args, **kwargs)
            return wrapper

        keys = list(dct)
        for key in keys:
            val = dct[key]
            if key.startswith('test_'):
                val = make_wrapper(val)
            dct[key] = val

        return super().__new__(cls, name, parents, dct)


class TestCase(unittest.TestCase, metaclass=TestCaseMeta):
    pass
