"""Truncated graded series in the odd time variables."""

import random
from fractions import Fraction

import pytest

from bkpq.gseries import BiSeries, OddSeries, TruncationError, mono_weight


def rand_series(rng, W, nterms=6):
    """A random series with rational coefficients, no constant term."""
    out = OddSeries(W)
    for _ in range(nterms):
        m = rng.choice([1, 3, 5, 7])
        e = rng.randint(1, 3)
        if m * e > W:
            continue
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        term = OddSeries.variable(W, m)
        for _ in range(e - 1):
            term = term * OddSeries.variable(W, m)
        out = out + term * c
    return out


def test_variable_and_weight():
    t1 = OddSeries.variable(8, 1)
    assert t1.coefficient(((1, 1),)) == 1
    assert mono_weight(((1, 2), (3, 1))) == 5
    with pytest.raises(ValueError):
        OddSeries.variable(8, 2)


def test_mul_convolution():
    W = 6
    t1 = OddSeries.variable(W, 1)
    t3 = OddSeries.variable(W, 3)
    p = (t1 + t3) * (t1 - t3)
    assert p.coefficient(((1, 2),)) == 1
    assert p.coefficient(((3, 2),)) == -1
    assert p.coefficient(((1, 1), (3, 1))) == 0


def test_mul_rejects_truncation_mismatch():
    a = OddSeries.variable(4, 1)
    b = OddSeries.variable(8, 3)
    with pytest.raises(TruncationError):
        a * b
    p = a * b.retruncate(4)
    assert p.truncation_weight == 4
    assert p.coefficient(((1, 1), (3, 1),)) == 1


def test_coefficient_beyond_truncation_raises():
    t1 = OddSeries.variable(4, 1)
    with pytest.raises(TruncationError):
        t1.coefficient(((1, 5),))


def test_exp_of_t1():
    W = 8
    e = OddSeries.variable(W, 1).exp()
    fact = 1
    for n in range(W + 1):
        if n:
            fact *= n
        assert e.coefficient(((1, n),) if n else ()) == Fraction(1, fact)


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        (OddSeries.constant(6, 1)).exp()


def test_exp_inverse_property():
    rng = random.Random(11)
    for _ in range(8):
        a = rand_series(rng, 8)
        prod = a.exp() * (-a).exp()
        assert (prod - OddSeries.constant(8, 1)).is_zero()


def test_ring_axioms_random():
    rng = random.Random(23)
    one = OddSeries.constant(8, 1)
    for _ in range(6):
        a, b, c = (rand_series(rng, 8) for _ in range(3))
        assert ((a + b) + c - (a + (b + c))).is_zero()
        assert (a * b - b * a).is_zero()
        assert ((a * b) * c - a * (b * c)).is_zero()
        assert (a * (b + c) - (a * b + a * c)).is_zero()
        assert (a * one - a).is_zero()
        assert (a - a).is_zero()


def test_partial_leibniz():
    rng = random.Random(5)
    for m in (1, 3):
        a = rand_series(rng, 8)
        b = rand_series(rng, 8)
        lhs = (a * b).partial(m)
        rhs = a.partial(m) * b + a * b.partial(m)
        assert (lhs - rhs).is_zero()


def test_partial_example():
    W = 6
    t1 = OddSeries.variable(W, 1)
    f = t1 * t1 * Fraction(1, 2)
    assert (f.partial(1) - t1).is_zero()
    assert f.partial(3).is_zero()


def test_substitute_scaled():
    W = 6
    a = Fraction(2)
    f = OddSeries.variable(W, 1) + OddSeries.variable(W, 3)
    g = f.substitute_scaled(a)
    assert g.coefficient(((1, 1),)) == 2
    assert g.coefficient(((3, 1),)) == 8
    # substitution is a ring map: commutes with exp
    h = f.exp().substitute_scaled(a)
    assert (h - g.exp()).is_zero()


def test_weight_component_decomposition():
    rng = random.Random(3)
    f = rand_series(rng, 8) + OddSeries.constant(8, Fraction(5, 7))
    total = OddSeries(8)
    for w in range(9):
        total = total + f.weight_component(w)
    assert (total - f).is_zero()


def test_retruncate():
    f = OddSeries.variable(8, 1).exp()
    g = f.retruncate(4)
    assert g.truncation_weight == 4
    assert g.coefficient(((1, 4),)) == Fraction(1, 24)


def test_json_round_trip():
    rng = random.Random(17)
    f = rand_series(rng, 8) + OddSeries.constant(8, Fraction(-3, 4))
    payload = f.to_json()
    assert payload["truncation_weight"] == 8
    for term in payload["terms"]:
        assert set(term) == {"exps", "coeff"}
        Fraction(term["coeff"])  # parses as exact rational
    g = OddSeries.from_json(payload)
    assert (f - g).is_zero()


def pair_term(W, m):
    """The bilinear monomial t_m t*_m as a BiSeries."""
    return BiSeries(W, W, {(((m, 1),), ((m, 1),)): Fraction(1)})


def test_biseries_exp_and_swap():
    # kernel sum_m (m/2) t_m t*_m is swap-invariant, so is its exponential
    W = 6
    ker = BiSeries(W, W)
    for m in (1, 3, 5):
        ker = ker + pair_term(W, m) * Fraction(m, 2)
    e = ker.exp()
    assert e.coefficient((), ()) == 1
    assert e.coefficient(((1, 1),), ((1, 1),)) == Fraction(1, 2)
    assert e.coefficient(((3, 1),), ((3, 1),)) == Fraction(3, 2)
    assert e.coefficient(((1, 2),), ((1, 2),)) == Fraction(1, 8)
    assert (e - e.swap()) == BiSeries(W, W)


def test_biseries_scaling():
    W = 6
    a = Fraction(2)
    f = BiSeries(W, W, {(((3, 1),), ()): Fraction(1), ((), ((3, 1),)): Fraction(1)})
    g = f.substitute_scaled(a)
    assert g.coefficient(((3, 1),), ()) == 8
    assert g.coefficient((), ((3, 1),)) == Fraction(1, 8)
    # balanced monomials are fixed
    h = pair_term(W, 3).substitute_scaled(a)
    assert h == pair_term(W, 3)
