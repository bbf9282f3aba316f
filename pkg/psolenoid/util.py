"""helpers shared by all psolenoid modules: errors, debug messages, factoring"""

import sys

from sympy import factorint, isprime

# debug level; 0 keeps everything quiet. raised by the command line's -d flag.
debug = 0
_indent = 0


def msg(level, s, *args):
    """print a debug message to stderr if the debug level allows it"""
    if s and level <= debug:
        if args:
            s = "%s %s" % (s, " ".join([str(x) for x in args]))
        sys.stderr.write("%s%s\n" % ("  " * _indent, s))


def msgin(level, s, *args):
    global _indent
    if level <= debug:
        msg(level, s, *args)
        _indent += 1


def msgout(level, s, *args):
    global _indent
    if level <= debug:
        _indent = max(0, _indent - 1)
        msg(level, s, *args)


class error(Exception):
    pass


class NotCoprime(error):
    pass


class IndexOutOfRange(error):
    pass


class NotPrime(error):
    def __init__(self, token, position=None):
        self.token = token
        self.position = position
        if position is None:
            error.__init__(self, "%s is not a prime" % (token,))
        else:
            error.__init__(self, "%s at position %d is not a prime" % (token, position))


class SpecSyntaxError(error):
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        error.__init__(self, "at position %d of %r: expected %s" % (position, text, expected))


class MismatchedSpec(error):
    pass


class MismatchedDepth(error):
    pass


class NotCompatible(error):
    pass


class BadIndices(error):
    pass


class BadIndex(error):
    pass


class DepthTooShallow(error):
    pass


class NotMember(error):
    pass


class QNotUsable(error):
    pass


def check_prime(q, position=None):
    if not isinstance(q, int) or isinstance(q, bool) or not isprime(q):
        raise NotPrime(q, position)
    return q


def factor(n):
    """(prime, exponent) pairs of n >= 1, smallest prime first"""
    return sorted(factorint(n).items())


def max_exponent(n):
    return max([e for q, e in factor(n)] or [0])
