"""
Finite descriptions of infinite prime sequences P = (p_1, p_2, ...).

A sequence is a finite prefix followed by a tail that is either a cycle
repeated forever or the "universal" enumeration: blocks B_1, B_2, ... where
B_i lists the first i primes outside an excluded set.  Everything the
solenoid sees of P (which primes occur infinitely often, the set S(P) of
the others, the equivalence class of P) is decided from that description.
"""

from functools import lru_cache
from math import isqrt

from sympy import nextprime

from psolenoid.util import BadIndices, SpecSyntaxError, check_prime


class Tail(object):
    def infoTuple(self):
        return ()

    def __eq__(self, other):
        return type(self) is type(other) and self.infoTuple() == other.infoTuple()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__,) + self.infoTuple())

    def __repr__(self):
        return "%s%r" % (type(self).__name__, self.infoTuple())


class Cycle(Tail):
    """the list `primes` repeated forever"""

    def __init__(self, primes):
        primes = tuple(primes)
        if not primes:
            raise ValueError("a cycle needs at least one prime")
        for p in primes:
            check_prime(p)
        self.primes = primes

    def infoTuple(self):
        return (self.primes,)


class Universal(Tail):
    """blocks B_start, B_start+1, ... of primes not in `excluded`

    start is 1 for every sequence a user writes down; shift() raises it so
    that a shifted universal sequence is still described exactly.
    """

    def __init__(self, excluded=(), start=1):
        for p in excluded:
            check_prime(p)
        if start < 1:
            raise ValueError("universal blocks start at 1, got %d" % (start,))
        self.excluded = tuple(sorted(set(excluded)))
        self.start = start

    def infoTuple(self):
        return (self.excluded, self.start)


class PrimeSeqSpec(object):
    def __init__(self, prefix=(), tail=None):
        prefix = tuple(prefix)
        for p in prefix:
            check_prime(p)
        if tail is None:
            tail = Universal()
        self.prefix = prefix
        self.tail = tail

    @classmethod
    def parse(cls, text):
        return _SpecParser(text).parse()

    def infoTuple(self):
        return (self.prefix, self.tail)

    def __eq__(self, other):
        if not isinstance(other, PrimeSeqSpec):
            return NotImplemented
        return self.infoTuple() == other.infoTuple()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.infoTuple())

    def __str__(self):
        return format_spec(self)

    def __repr__(self):
        return "PrimeSeqSpec(%r)" % (format_spec(self),)


def cycle(primes, prefix=()):
    return PrimeSeqSpec(prefix, Cycle(primes))


def universal(excluded=(), prefix=()):
    return PrimeSeqSpec(prefix, Universal(excluded))


# -- text form -------------------------------------------------------------

def _primes_text(primes):
    return "[%s]" % (",".join([str(p) for p in primes]),)


def format_spec(P):
    parts = []
    if P.prefix:
        parts.append("prefix=" + _primes_text(P.prefix))
    tail = P.tail
    if isinstance(tail, Cycle):
        parts.append("cycle=" + _primes_text(tail.primes))
    else:
        if tail.excluded:
            parts.append("universal=exclude" + _primes_text(tail.excluded))
        else:
            parts.append("universal")
        if tail.start != 1:
            parts.append("start=%d" % (tail.start,))
    return ";".join(parts)


class _SpecParser(object):
    """recursive descent over

        [prefix=[p,...];](cycle=[p,...]|universal[=exclude[p,...]])[;start=n]

    whitespace is ignored; positions in errors refer to the original text.
    """

    grammar = "[prefix=[p,...];](cycle=[p,...]|universal[=exclude[p,...]])"

    def __init__(self, text):
        self.text = text
        self.chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0

    def position(self):
        if self.pos < len(self.chars):
            return self.chars[self.pos][0]
        return len(self.text)

    def fail(self, expected):
        raise SpecSyntaxError(self.text, self.position(), expected)

    def peek(self, literal):
        got = "".join([c for i, c in self.chars[self.pos:self.pos + len(literal)]])
        return got == literal

    def accept(self, literal):
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal, expected=None):
        if not self.accept(literal):
            self.fail(expected or repr(literal))

    def number(self):
        start = self.pos
        while self.pos < len(self.chars) and self.chars[self.pos][1].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("a decimal integer")
        return int("".join([c for i, c in self.chars[start:self.pos]])), self.chars[start][0]

    def primes(self):
        self.expect("[", "'[' opening a prime list")
        found = []
        if self.accept("]"):
            return found
        while True:
            value, where = self.number()
            found.append(check_prime(value, where))
            if self.accept("]"):
                return found
            self.expect(",", "',' or ']' in a prime list")

    def parse(self):
        prefix = []
        if self.accept("prefix="):
            prefix = self.primes()
            self.expect(";", "';' after the prefix")
        if self.accept("cycle="):
            where = self.position()
            primes = self.primes()
            if not primes:
                raise SpecSyntaxError(self.text, where, "at least one prime in the cycle")
            tail = Cycle(primes)
        elif self.accept("universal"):
            excluded = []
            if self.accept("="):
                self.expect("exclude", "'exclude' after 'universal='")
                excluded = self.primes()
            start = 1
            if self.accept(";start="):
                start, where = self.number()
                if start < 1:
                    raise SpecSyntaxError(self.text, where, "a block index >= 1")
            tail = Universal(excluded, start)
        else:
            self.fail("'cycle=' or 'universal' (grammar: %s)" % (self.grammar,))
        if self.pos != len(self.chars):
            self.fail("end of the sequence spec")
        return PrimeSeqSpec(prefix, tail)


def parse_spec(text):
    return PrimeSeqSpec.parse(text)


# -- the terms ---------------------------------------------------------------

@lru_cache(maxsize=None)
def admissible_primes(excluded, count):
    """the first `count` primes not in `excluded`, increasing"""
    found = []
    p = 1
    while len(found) < count:
        p = int(nextprime(p))
        if p not in excluded:
            found.append(p)
    return tuple(found)


def _block_of(position):
    """(block i, index r within it) of the 1-based position in B_1 B_2 ..."""
    i = (isqrt(8 * position) + 1) // 2
    while i * (i - 1) // 2 >= position:
        i -= 1
    while i * (i + 1) // 2 < position:
        i += 1
    return i, position - i * (i - 1) // 2


def nth_prime(P, n):
    """p_n, counting from 1"""
    if n < 1:
        raise BadIndices("terms are numbered from 1, got %d" % (n,))
    if n <= len(P.prefix):
        return P.prefix[n - 1]
    j = n - len(P.prefix)
    tail = P.tail
    if isinstance(tail, Cycle):
        return tail.primes[(j - 1) % len(tail.primes)]
    offset = tail.start * (tail.start - 1) // 2
    i, r = _block_of(j + offset)
    return admissible_primes(tail.excluded, i)[r - 1]


def iter_terms(P):
    """p_1, p_2, ... forever"""
    for p in P.prefix:
        yield p
    tail = P.tail
    if isinstance(tail, Cycle):
        while True:
            for p in tail.primes:
                yield p
    excluded = set(tail.excluded)
    block = list(admissible_primes(tail.excluded, tail.start - 1))
    p = block[-1] if block else 1
    while True:
        p = int(nextprime(p))
        while p in excluded:
            p = int(nextprime(p))
        block.append(p)
        for q in block:
            yield q


@lru_cache(maxsize=1024)
def terms(P, n):
    """(p_1, ..., p_n)"""
    found = []
    if n <= 0:
        return ()
    for p in iter_terms(P):
        found.append(p)
        if len(found) == n:
            break
    return tuple(found)


def partial_product(P, m, n):
    """p_m * p_m+1 * ... * p_n-1; the empty product 1 when m == n"""
    if not 1 <= m <= n:
        raise BadIndices("need 1 <= m <= n, got m=%d n=%d" % (m, n))
    result = 1
    for p in terms(P, n - 1)[m - 1:]:
        result *= p
    return result


# -- which primes occur infinitely often -------------------------------------

class PrimeSet(object):
    """a set of primes described by a finite list and a polarity"""

    def __init__(self, primes):
        self.primes = frozenset(primes)

    def __eq__(self, other):
        return type(self) is type(other) and self.primes == other.primes

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, self.primes))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, sorted(self.primes))


class ExactlySet(PrimeSet):
    def __contains__(self, q):
        return q in self.primes


class AllPrimesExcept(PrimeSet):
    def __contains__(self, q):
        return q not in self.primes


def inf_occur_set(P):
    """the primes that occur infinitely often in P"""
    if isinstance(P.tail, Cycle):
        return ExactlySet(P.tail.primes)
    return AllPrimesExcept(P.tail.excluded)


def s_set(P):
    """S(P): the primes that occur only finitely often in P"""
    if isinstance(P.tail, Cycle):
        return AllPrimesExcept(P.tail.primes)
    return ExactlySet(P.tail.excluded)


def occurs_infinitely_often(P, q):
    check_prime(q)
    return q in inf_occur_set(P)


def in_s(P, q):
    return not occurs_infinitely_often(P, q)


class SClass(object):
    primes = frozenset()

    def __init__(self, primes=()):
        self.primes = frozenset(primes)

    def __eq__(self, other):
        return type(self) is type(other) and self.primes == other.primes

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, self.primes))

    def __repr__(self):
        if self.primes:
            return "%s(%s)" % (type(self).__name__, sorted(self.primes))
        return "%s()" % (type(self).__name__,)


class Empty(SClass):
    pass


class FiniteNonempty(SClass):
    pass


class Infinite(SClass):
    pass


def s_classification(P):
    if isinstance(P.tail, Cycle):
        return Infinite()
    if P.tail.excluded:
        return FiniteNonempty(P.tail.excluded)
    return Empty()


def equivalent(P, Q):
    """P ~ Q: finitely many deletions turn both into the same prime multiset

    Primes occurring finitely often can always be deleted, so only the sets
    of infinitely occurring primes have to agree.
    """
    return inf_occur_set(P) == inf_occur_set(Q)


def finite_count(P, q):
    """how often q occurs in P, or None when it occurs infinitely often"""
    if occurs_infinitely_often(P, q):
        return None
    return P.prefix.count(q)


def last_occurrence(P, q):
    """largest n with p_n == q (0 if q never occurs), None if there is none"""
    if occurs_infinitely_often(P, q):
        return None
    for n in range(len(P.prefix), 0, -1):
        if P.prefix[n - 1] == q:
            return n
    return 0


def shift(P, m):
    """the sequence (p_m+1, p_m+2, ...), described exactly"""
    if m < 0:
        raise BadIndices("cannot drop %d terms" % (m,))
    if m <= len(P.prefix):
        return PrimeSeqSpec(P.prefix[m:], P.tail)
    j = m - len(P.prefix)
    tail = P.tail
    if isinstance(tail, Cycle):
        r = j % len(tail.primes)
        return PrimeSeqSpec((), Cycle(tail.primes[r:] + tail.primes[:r]))
    offset = tail.start * (tail.start - 1) // 2
    i, r = _block_of(j + offset + 1)
    rest = admissible_primes(tail.excluded, i)[r - 1:]
    return PrimeSeqSpec(rest, Universal(tail.excluded, i + 1))


def bounded_equivalent(P, Q, horizon=10 ** 4, bound=100):
    """counting check of P ~ Q over the first `horizon` terms

    Prefixes are deleted, then a prime <= bound counts as infinitely
    occurring when it still shows up in the second half of the window.
    Finitely occurring primes are deletable and are ignored.
    """
    def infinite_primes(S):
        window = terms(S, len(S.prefix) + horizon)[len(S.prefix):]
        late = set(window[horizon // 2:])
        return set([q for q in late if q <= bound])

    return infinite_primes(P) == infinite_primes(Q)

