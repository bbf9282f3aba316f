"""
P-adic rationals: the rationals m / (p_1 p_2 ... p_n).

They form the group F_P, which is q-divisible exactly when q occurs
infinitely often in P.  Membership is decided from the description of P; the
search over partial products in is_member_search is kept as a second
opinion.
"""

from fractions import Fraction

from sympy import primepi

from psolenoid.primeseq import Cycle, finite_count, format_spec, iter_terms, occurs_infinitely_often
from psolenoid.util import NotMember, SpecSyntaxError, check_prime, factor, max_exponent, msg


class PadicRational(object):
    """num/den in lowest terms, den >= 1"""

    __slots__ = ("_value",)

    def __init__(self, num=0, den=1):
        self._value = Fraction(num, den)

    @classmethod
    def parse(cls, text):
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise SpecSyntaxError(text, 0, "a rational number written num/den")

    @property
    def num(self):
        return self._value.numerator

    @property
    def den(self):
        return self._value.denominator

    @property
    def value(self):
        return self._value

    def __add__(self, other):
        return PadicRational(self._value + other.value)

    def __sub__(self, other):
        return PadicRational(self._value - other.value)

    def __neg__(self):
        return PadicRational(-self._value)

    def __mul__(self, n):
        return PadicRational(self._value * n)

    __rmul__ = __mul__

    def __truediv__(self, n):
        return PadicRational(self._value / n)

    def __eq__(self, other):
        if not isinstance(other, PadicRational):
            return NotImplemented
        return self._value == other._value

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        return "%d/%d" % (self.num, self.den)

    def __repr__(self):
        return "PadicRational(%d, %d)" % (self.num, self.den)


def is_member(P, x):
    """x in F_P: den(x) divides some partial product p_1 ... p_n"""
    for q, e in factor(x.den):
        if occurs_infinitely_often(P, q):
            continue
        if finite_count(P, q) < e:
            msg(2, "is_member:", x, "needs %d^%d but P has %d" % (q, e, finite_count(P, q)))
            return False
    return True


def is_q_divisible(P, q):
    """F_P is q-divisible iff q occurs infinitely often in P"""
    return occurs_infinitely_often(P, check_prime(q))


def is_k_divisible(P, k):
    """F_P is k-divisible iff it is q-divisible for every prime q | k"""
    return all([is_q_divisible(P, q) for q, e in factor(k)])


def divide_witness(P, x, q):
    """x / q when it is still in F_P, else None"""
    check_prime(q)
    if not is_member(P, x):
        raise NotMember("%s is not in F_P for %s" % (x, format_spec(P)))
    y = x / q
    if is_member(P, y):
        return y
    return None


def _admissible_rank(excluded, q):
    """position of q among the primes not in `excluded`"""
    return int(primepi(q)) - len([p for p in excluded if p <= q])


def search_bound(P, den):
    """number of terms after which every prime power of den that P can
    supply at all has been supplied"""
    e = max_exponent(den)
    tail = P.tail
    if isinstance(tail, Cycle):
        return len(P.prefix) + len(tail.primes) * e
    ranks = [_admissible_rank(tail.excluded, q) for q, a in factor(den)
             if q not in tail.excluded]
    last = max([tail.start] + ranks) + e - 1
    return len(P.prefix) + sum(range(tail.start, last + 1))


def is_member_search(P, x, horizon=None):
    """is_member by trying the partial products p_1 ... p_n, n <= horizon"""
    den = x.den
    if horizon is None:
        horizon = search_bound(P, den)
    if den == 1:
        return True
    product = 1
    n = 0
    for p in iter_terms(P):
        if n >= horizon:
            break
        product = product * p % den
        n += 1
        if product == 0:
            return True
    return False
