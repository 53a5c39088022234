"""Partitions: strict/ordinary enumeration, Frobenius coordinates, doubling,
shifted diagrams and tableaux counts."""

import random

import pytest

from bkpq.partitions import (
    Partition,
    StrictPartition,
    conjugate,
    count_distinct_part_partitions,
    count_shifted_syt,
    double,
    enumerate_partitions,
    enumerate_strict,
    frobenius,
    from_frobenius,
    shifted_cells,
)
from bkpq.rspec import hook_star


def test_strict_rejects_repeats_and_disorder():
    with pytest.raises(ValueError):
        StrictPartition([2, 2])
    with pytest.raises(ValueError):
        StrictPartition([1, 2])
    with pytest.raises(ValueError):
        StrictPartition([2, 0])


def test_strict_basic_properties():
    lam = StrictPartition([5, 3, 1])
    assert lam.weight == 9
    assert lam.length == 3
    assert lam.to_json() == [5, 3, 1]
    assert StrictPartition([]).weight == 0


def test_enumerate_strict_small():
    got = [p.parts for p in enumerate_strict(4)]
    assert got == [(1,), (2,), (3,), (2, 1), (4,), (3, 1)]


def test_enumerate_strict_counts_match_generating_function():
    # number of partitions into distinct parts, cross-checked against
    # the Euler product expansion
    for w in range(1, 13):
        assert len(list(enumerate_strict(w))) == count_distinct_part_partitions(w)


def test_enumerate_partitions_small():
    got = [p.parts for p in enumerate_partitions(3)]
    assert got == [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_conjugate_examples_and_involution():
    assert conjugate(Partition([3, 1])).parts == (2, 1, 1)
    assert conjugate(Partition([])).parts == ()
    for mu in enumerate_partitions(8):
        assert conjugate(conjugate(mu)) == mu


def test_frobenius_round_trip():
    for mu in enumerate_partitions(9):
        alpha, beta = frobenius(mu)
        assert from_frobenius(alpha, beta) == mu
        # arm/leg lists are strictly decreasing
        assert list(alpha) == sorted(alpha, reverse=True)
        assert list(beta) == sorted(beta, reverse=True)


def test_double_examples():
    assert double(StrictPartition([2])).parts == (3, 1)
    assert double(StrictPartition([2, 1])).parts == (3, 3)
    assert double(StrictPartition([8])).parts == (9,) + (1,) * 7


def test_double_frobenius_coordinates():
    # the double of a strict partition has arms n_i and legs n_i - 1
    for lam in enumerate_strict(8):
        mu = double(lam)
        assert mu.weight == 2 * lam.weight
        alpha, beta = frobenius(mu)
        assert alpha == lam.parts
        assert beta == tuple(p - 1 for p in lam.parts)


def test_shifted_cells():
    # row i (1-based) starts at column i
    cells = set(shifted_cells(StrictPartition([3, 1])))
    assert cells == {(1, 1), (1, 2), (1, 3), (2, 2)}
    for lam in enumerate_strict(7):
        assert len(list(shifted_cells(lam))) == lam.weight


def test_count_shifted_syt_examples():
    assert count_shifted_syt(StrictPartition([])) == 1
    assert count_shifted_syt(StrictPartition([4])) == 1
    assert count_shifted_syt(StrictPartition([2, 1])) == 1
    assert count_shifted_syt(StrictPartition([3, 1])) == 2
    assert count_shifted_syt(StrictPartition([4, 2])) == 5


def test_count_shifted_syt_matches_hook_formula():
    for lam in enumerate_strict(7):
        fact = 1
        for k in range(2, lam.weight + 1):
            fact *= k
        assert count_shifted_syt(lam) * hook_star(lam) == fact


def test_count_shifted_syt_bound():
    with pytest.raises(ValueError):
        count_shifted_syt(StrictPartition([7, 5]))


def test_partitions_hashable():
    rng = random.Random(7)
    pool = list(enumerate_strict(6))
    sample = [pool[rng.randrange(len(pool))] for _ in range(20)]
    assert len(set(sample)) == len({p.parts for p in sample})
