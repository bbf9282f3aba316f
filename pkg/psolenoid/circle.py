"""
Exact arithmetic on the circle group, written additively as Q/Z.

A point of the unit circle exp(2 pi i t) is stored as the fraction t of a
full turn, so raising to the k-th power is multiplication by k.  Every
comparison is an exact rational comparison; nothing here ever touches a
float.
"""

from fractions import Fraction
from math import ceil, floor, gcd

from sympy import mod_inverse, n_order

from psolenoid.util import IndexOutOfRange, NotCoprime, SpecSyntaxError, msg


def _fraction(text, whole, offset=0):
    """parse text, found at `offset` in whole"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise SpecSyntaxError(whole, offset, "a rational number such as 3/25")


class Angle(object):
    """a torsion point of the circle: num/den of a turn, reduced, 0 <= num < den"""

    __slots__ = ("_value",)

    def __init__(self, num=0, den=1):
        if den == 0:
            raise ZeroDivisionError("angle with denominator 0")
        self._value = Fraction(num, den) % 1

    @classmethod
    def from_fraction(cls, value):
        a = cls.__new__(cls)
        a._value = Fraction(value) % 1
        return a

    @classmethod
    def parse(cls, text):
        return cls.from_fraction(_fraction(text, text))

    @property
    def num(self):
        return self._value.numerator

    @property
    def den(self):
        return self._value.denominator

    @property
    def value(self):
        return self._value

    @property
    def order(self):
        return self._value.denominator

    def __add__(self, other):
        return angle_add(self, other)

    def __neg__(self):
        return angle_neg(self)

    def __sub__(self, other):
        return angle_add(self, angle_neg(other))

    def __mul__(self, k):
        return angle_scale(self, k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        return self._value == other._value

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        return self._value < other._value

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        return "%d/%d" % (self.num, self.den)

    def __repr__(self):
        return "Angle(%d, %d)" % (self.num, self.den)


ZERO = Angle(0, 1)


class Arc(object):
    """open arc { t mod 1 : start < t < start + length }, wrapping mod 1"""

    __slots__ = ("_start", "_length")

    def __init__(self, start, length):
        start, length = Fraction(start), Fraction(length)
        if not 0 < length <= 1:
            raise ValueError("arc length must lie in (0, 1], got %s" % (length,))
        self._start = start % 1
        self._length = length

    @classmethod
    def parse(cls, text):
        if "+" not in text:
            raise SpecSyntaxError(text, len(text), "an arc written as start+length, e.g. 1/10+1/10")
        head, tail = text.split("+", 1)
        start, length = _fraction(head, text), _fraction(tail, text, len(head) + 1)
        if not 0 < length <= 1:
            raise SpecSyntaxError(text, text.index("+") + 1, "an arc length in (0, 1]")
        return cls(start, length)

    @property
    def start(self):
        return self._start

    @property
    def length(self):
        return self._length

    def contains(self, a):
        t = (a.value - self._start) % 1
        return 0 < t < self._length

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, Arc):
            return NotImplemented
        return (self._start, self._length) == (other._start, other._length)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self._start, self._length))

    def __str__(self):
        return "%s+%s" % (_text(self._start), _text(self._length))

    def __repr__(self):
        return "Arc(%s)" % (self,)


def _text(value):
    return "%d/%d" % (value.numerator, value.denominator)


FULL_CIRCLE = Arc(0, 1)


def angle_add(a, b):
    return Angle.from_fraction(a.value + b.value)


def angle_neg(a):
    return Angle.from_fraction(-a.value)


def angle_scale(a, k):
    """the k-th potency map z -> z**k, i.e. k*a mod 1"""
    return Angle.from_fraction(a.value * k)


def angle_unscale(a, p):
    """the unique b of the same order as a with p*b == a

    This is the inverse of z -> z**p on the cyclic group of den(a)-th roots
    of unity, which exists exactly when p and den(a) are coprime.
    """
    den = a.den
    if gcd(p, den) != 1:
        raise NotCoprime("%d shares a factor with the order %d of %s" % (p, den, a))
    if den == 1:
        return a
    return Angle(a.num * int(mod_inverse(p, den)) % den, den)


def roots_of_unity_in_arc(N, arc):
    """all N-torsion angles strictly inside arc, in increasing order"""
    lo = arc.start * N
    hi = (arc.start + arc.length) * N
    found = set()
    for a in range(floor(lo) + 1, ceil(hi)):
        found.add(Angle(a, N))
    return sorted(found)


def arc_preimage_component(arc, c, which):
    """component `which` of the preimage of arc under t -> c*t"""
    if not 0 <= which < c:
        raise IndexOutOfRange("component %d of a %d-sheeted preimage" % (which, c))
    return Arc((arc.start + which) / c, arc.length / c)


def multiplicative_order(k, N):
    """least t >= 1 with k**t == 1 mod N"""
    if N == 1:
        return 1
    if gcd(k, N) != 1:
        raise NotCoprime("%d is not a unit modulo %d" % (k, N))
    t = int(n_order(k % N, N))
    msg(3, "order of", k, "modulo", N, "is", t)
    return t
