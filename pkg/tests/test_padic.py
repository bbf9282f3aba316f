#! /usr/bin/env py.test

import pytest
from hypothesis import given, strategies as st

from conftest import GRID, GRID_TEXT
from psolenoid.covering import admits_k_fold
from psolenoid.padic import (PadicRational, divide_witness, is_k_divisible, is_member,
                             is_member_search, is_q_divisible, search_bound)
from psolenoid.primeseq import cycle, parse_spec, partial_product, universal
from psolenoid.util import NotMember, NotPrime, SpecSyntaxError, factor


def test_parse_and_str():
    x = PadicRational.parse("6/8")
    assert (x.num, x.den) == (3, 4)
    assert str(x) == "3/4"
    assert str(PadicRational.parse("-5")) == "-5/1"
    with pytest.raises(SpecSyntaxError):
        PadicRational.parse("3/0")
    with pytest.raises(SpecSyntaxError):
        PadicRational.parse("three")


def test_arithmetic():
    x, y = PadicRational(1, 4), PadicRational(1, 6)
    assert x + y == PadicRational(5, 12)
    assert x - y == PadicRational(1, 12)
    assert -x == PadicRational(-1, 4)
    assert 2 * x == PadicRational(1, 2)
    assert x / 3 == PadicRational(1, 12)


@pytest.mark.parametrize("spec, x, expected", [
    ("cycle=[2]", "5/8", True),
    ("cycle=[2]", "1/3", False),
    ("prefix=[3];cycle=[2]", "1/9", False),
    ("prefix=[3];cycle=[2]", "7/3", True),
    ("prefix=[3];cycle=[2]", "1/96", True),
    ("universal", "1/997", True),
    ("universal=exclude[2]", "1/2", False),
    ("prefix=[2];universal=exclude[2]", "1/2", True),
    ("cycle=[2,3]", "-7", True),
])
def test_is_member(spec, x, expected):
    P = parse_spec(spec)
    assert is_member(P, PadicRational.parse(x)) is expected
    assert is_member_search(P, PadicRational.parse(x)) is expected


def test_search_bound():
    assert search_bound(cycle([2], prefix=[3]), 9) == 3
    assert search_bound(universal(), 8) == 6
    assert search_bound(universal([2]), 27) == 6
    assert search_bound(universal([2, 3]), 4) == 3


@pytest.mark.parametrize("P", GRID, ids=GRID_TEXT)
def test_membership_agrees_with_search(P):
    for den in range(1, 130):
        x = PadicRational(1, den)
        assert is_member(P, x) == is_member_search(P, x), den


def test_is_q_divisible():
    assert is_q_divisible(cycle([2]), 2)
    assert not is_q_divisible(cycle([2]), 3)
    for q in (2, 3, 5, 7, 11, 97):
        assert is_q_divisible(universal(), q)
    with pytest.raises(NotPrime):
        is_q_divisible(cycle([2]), 6)


def test_is_k_divisible():
    assert is_k_divisible(cycle([2, 3]), 12)
    assert not is_k_divisible(cycle([2]), 6)
    assert is_k_divisible(cycle([2]), 1)


@pytest.mark.parametrize("spec, x, q, expected", [
    ("cycle=[2]", "3/4", 2, "3/8"),
    ("cycle=[2]", "1/2", 3, None),
    ("prefix=[3];cycle=[2]", "1/3", 3, None),
    ("prefix=[3];cycle=[2]", "1", 3, "1/3"),
])
def test_divide_witness(spec, x, q, expected):
    w = divide_witness(parse_spec(spec), PadicRational.parse(x), q)
    if expected is None:
        assert w is None
    else:
        assert w == PadicRational.parse(expected)
        assert q * w == PadicRational.parse(x)


def test_divide_witness_needs_member():
    with pytest.raises(NotMember):
        divide_witness(cycle([2]), PadicRational(1, 3), 2)
    with pytest.raises(NotPrime):
        divide_witness(cycle([2]), PadicRational(1, 2), 4)


def members(P):
    """a strategy for elements of F_P"""
    return st.builds(lambda num, n: PadicRational(num, partial_product(P, 1, n)),
                     st.integers(-10 ** 6, 10 ** 6), st.integers(1, 12))


@pytest.mark.parametrize("P", GRID, ids=GRID_TEXT)
def test_repeated_division(P):
    @given(members(P))
    def check(x):
        assert is_member(P, x)
        for q in (2, 3, 5, 7):
            if not is_q_divisible(P, q):
                continue
            y = x
            for i in range(5):
                w = divide_witness(P, y, q)
                assert w is not None
                assert q * w == y
                y = w
    check()


@pytest.mark.parametrize("P", GRID, ids=GRID_TEXT)
def test_closed_under_addition(P):
    @given(members(P), members(P))
    def check(x, y):
        assert is_member(P, x + y)
        assert is_member(P, x - y)
        assert is_member(P, -x)
    check()


@pytest.mark.parametrize("P", GRID, ids=GRID_TEXT)
def test_k_fold_iff_no_divisible_prime(P):
    for k in range(1, 61):
        expected = not any([is_q_divisible(P, q) for q, e in factor(k)])
        assert admits_k_fold(P, k) == expected
