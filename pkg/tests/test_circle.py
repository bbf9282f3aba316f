#! /usr/bin/env py.test

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psolenoid.circle import (Angle, Arc, FULL_CIRCLE, ZERO, angle_add, angle_neg, angle_scale,
                              angle_unscale, arc_preimage_component, multiplicative_order,
                              roots_of_unity_in_arc)
from psolenoid.util import IndexOutOfRange, NotCoprime, SpecSyntaxError

angles = st.builds(Angle, st.integers(-1000, 1000), st.integers(1, 1000))
small_ints = st.integers(-50, 50)


def test_angle_reduced_mod_one():
    assert Angle(-1, 4) == Angle(3, 4)
    assert Angle(6, 4) == Angle(1, 2)
    assert str(Angle(3, 25)) == "3/25"
    assert str(ZERO) == "0/1"
    assert Angle(5, 5) == ZERO


def test_angle_parse():
    assert Angle.parse("3/25") == Angle(3, 25)
    assert Angle.parse(" 27/25 ") == Angle(2, 25)
    assert Angle.parse("0") == ZERO
    with pytest.raises(SpecSyntaxError):
        Angle.parse("1/0")
    with pytest.raises(SpecSyntaxError):
        Angle.parse("half")


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        Angle(1, 0)


def test_add_and_neg():
    assert angle_add(Angle(1, 2), Angle(1, 2)) == ZERO
    assert angle_add(Angle(1, 3), Angle(1, 6)) == Angle(1, 2)
    assert angle_neg(Angle(1, 3)) == Angle(2, 3)
    assert angle_neg(ZERO) == ZERO
    assert Angle(1, 3) - Angle(1, 2) == Angle(5, 6)


def test_scale():
    assert angle_scale(Angle(3, 4), 2) == Angle(1, 2)
    assert angle_scale(Angle(1, 7), 7) == ZERO
    assert 3 * Angle(1, 9) == Angle(1, 3)
    assert Angle(1, 3).order == 3


def test_unscale():
    assert angle_unscale(Angle(3, 25), 2) == Angle(14, 25)
    assert angle_unscale(ZERO, 2) == ZERO
    assert angle_unscale(Angle(1, 3), 2) == Angle(2, 3)


def test_unscale_not_coprime():
    with pytest.raises(NotCoprime):
        angle_unscale(Angle(1, 4), 2)


@given(angles, angles)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(angles)
def test_neg_is_inverse(a):
    assert a + (-a) == ZERO
    assert a + ZERO == a


@given(angles, small_ints, small_ints)
def test_scale_composes(a, l, m):
    assert angle_scale(angle_scale(a, l), m) == angle_scale(a, l * m)


@given(angles, st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_unscale_inverts_scale(a, p):
    if a.den % p == 0:
        with pytest.raises(NotCoprime):
            angle_unscale(a, p)
    else:
        b = angle_unscale(a, p)
        assert angle_scale(b, p) == a
        assert b.den == a.den


def test_arc_parse_and_str():
    arc = Arc.parse("1/10+1/10")
    assert arc == Arc(Fraction(1, 10), Fraction(1, 10))
    assert str(arc) == "1/10+1/10"
    assert Arc.parse("11/10+1/2") == Arc(Fraction(1, 10), Fraction(1, 2))


@pytest.mark.parametrize("text", ["1/10", "1/10+0", "0+2", "x+1/2"])
def test_arc_parse_errors(text):
    with pytest.raises(SpecSyntaxError):
        Arc.parse(text)


@pytest.mark.parametrize("text, position", [
    ("x+1/2", 0),
    ("32/1+2/", 5),
    ("2/+2/", 0),
    ("1/3+ 1/0", 4),
])
def test_arc_parse_error_position(text, position):
    with pytest.raises(SpecSyntaxError) as excinfo:
        Arc.parse(text)
    assert excinfo.value.position == position


def test_arc_length_checked():
    with pytest.raises(ValueError):
        Arc(0, 0)
    with pytest.raises(ValueError):
        Arc(0, Fraction(3, 2))


def test_arc_contains_open_and_wrapping():
    arc = Arc(Fraction(9, 10), Fraction(2, 10))
    assert arc.contains(ZERO)
    assert Angle(1, 20) in arc
    assert not arc.contains(Angle(9, 10))
    assert not arc.contains(Angle(1, 10))
    assert not Arc(0, Fraction(1, 2)).contains(ZERO)
    assert FULL_CIRCLE.contains(Angle(1, 2))
    assert not FULL_CIRCLE.contains(ZERO)


def test_roots_of_unity_in_arc():
    arc = Arc(Fraction(1, 10), Fraction(1, 10))
    assert roots_of_unity_in_arc(5, arc) == []
    assert roots_of_unity_in_arc(25, arc) == [Angle(3, 25), Angle(4, 25)]
    assert roots_of_unity_in_arc(10, arc) == []


def test_roots_of_unity_wrapping_arc():
    arc = Arc(Fraction(9, 10), Fraction(3, 10))
    assert roots_of_unity_in_arc(10, arc) == [ZERO, Angle(1, 10)]
    assert roots_of_unity_in_arc(5, arc) == [ZERO]


@given(st.integers(1, 60), st.integers(0, 59), st.integers(1, 60), st.integers(1, 60))
def test_roots_of_unity_brute_force(N, s, num, den):
    if num > den:
        num, den = den, num
    arc = Arc(Fraction(s, 60), Fraction(num, den))
    expected = sorted(set([Angle(a, N) for a in range(N) if arc.contains(Angle(a, N))]))
    assert roots_of_unity_in_arc(N, arc) == expected


def test_arc_preimage_component():
    arc = Arc(Fraction(1, 10), Fraction(1, 10))
    assert arc_preimage_component(arc, 4, 0) == Arc(Fraction(1, 40), Fraction(1, 40))
    assert arc_preimage_component(arc, 4, 1) == Arc(Fraction(11, 40), Fraction(1, 40))
    with pytest.raises(IndexOutOfRange):
        arc_preimage_component(arc, 4, 4)
    with pytest.raises(IndexOutOfRange):
        arc_preimage_component(arc, 4, -1)


@given(st.integers(0, 99), st.integers(1, 100), st.integers(1, 30), st.integers(0, 29),
       st.integers(-200, 200), st.integers(1, 200))
def test_preimage_component_maps_into_arc(s, length, c, which, num, den):
    which = which % c
    arc = Arc(Fraction(s, 100), Fraction(length, 100))
    V = arc_preimage_component(arc, c, which)
    a = Angle(num, den)
    if V.contains(a):
        assert arc.contains(angle_scale(a, c))


def test_multiplicative_order():
    assert multiplicative_order(3, 25) == 20
    assert multiplicative_order(2, 1) == 1
    assert multiplicative_order(10, 3) == 1
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 4)


def test_add_associative():
    for d1 in range(1, 61):
        a = Angle(1, d1)
        for d2 in range(1, 61):
            b = Angle(d2 - 1, d2)
            for d3 in range(1, 61):
                c = Angle(d3 // 2, d3)
                assert angle_add(angle_add(a, b), c) == angle_add(a, angle_add(b, c)), (a, b, c)


@given(angles, angles, angles)
def test_add_associative_random(a, b, c):
    assert angle_add(angle_add(a, b), c) == angle_add(a, angle_add(b, c))
