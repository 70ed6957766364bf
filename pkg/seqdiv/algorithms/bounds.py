"""
Approximation guarantees of the ranking algorithms, as closed-form
functions of the continuation probabilities.  They are used to certify the
algorithms against the exhaustive oracle, and are reported by the benchmark.
"""

import math

__all__ = [
    'uniform_bke_bound', 'nonuniform_bke_bound', 'greedy_bound',
    'osd_transfer_factor', 'osd_bke_bound', 'bkm_asymptotic_bound',
]


def uniform_bke_bound(p: float, n: int, kappa: int) -> float:
    """
    Best-κ items on uniform probability `p` approximates the optimal ordered
    Hamiltonian path within ``1 - p^(κ-1) - p^(n-κ) + p^n``.
    """
    return 1. - p ** (kappa - 1) - p ** (n - kappa) + p ** n


def nonuniform_bke_bound(a: float, b: float, kappa: int) -> float:
    """
    Best-κ items on probabilities within ``[a, b]`` approximates the optimal
    ordered Hamiltonian path within
    ``a^2 (1 - b) (1 - b^(κ-1)) / (a^2 + (κ - 1) b^(κ+1))``.
    """
    return (a ** 2 * (1. - b) * (1. - b ** (kappa - 1)) /
            (a ** 2 + (kappa - 1) * b ** (kappa + 1)))


def greedy_bound(a: float, b: float) -> float:
    """
    ``a^2 (1 - b)^2 / (a^2 + b^2)``, which never exceeds the κ = 2 case of
    :func:`nonuniform_bke_bound`.
    """
    return a ** 2 * (1. - b) ** 2 / (a ** 2 + b ** 2)


def osd_transfer_factor(a: float, b: float) -> float:
    """
    An ``α``-approximation of the ordered Hamiltonian path is an
    ``α * a (1 - b) / (2 b (1 - a))``-approximation of the sequential sum
    diversity, on metric distances.
    """
    return a * (1. - b) / (2. * b * (1. - a))


def osd_bke_bound(a: float, b: float, kappa: int) -> float:
    return osd_transfer_factor(a, b) * nonuniform_bke_bound(a, b, kappa)


def bkm_asymptotic_bound() -> float:
    """
    The limiting guarantee ``3 (e - 1) / (16 e^2)`` of greedy matching, which
    only holds asymptotically (it is reported, never asserted).
    """
    e = math.e
    return 3. * (e - 1.) / (16. * e ** 2)
