"""
Truncated points of the P-adic solenoid.

A point of the solenoid is a sequence (z_1, z_2, ...) of circle points with
z_n = z_n+1 ** p_n.  A TruncatedPoint keeps the first `depth` coordinates
and stands for every solenoid point that agrees with them; nothing here
claims to know deeper coordinates unless extend_back produced them.
"""

import json

from psolenoid.circle import Angle, ZERO, angle_add, angle_neg, angle_scale, angle_unscale
from psolenoid.primeseq import PrimeSeqSpec, format_spec, nth_prime, partial_product, shift, terms
from psolenoid.util import (BadIndex, BadIndices, MismatchedDepth, MismatchedSpec,
                            NotCompatible, msg)


class TruncatedPoint(object):
    """coords[0] is z_1; coordinates are Angles"""

    __slots__ = ("seq", "coords")

    def __init__(self, seq, coords):
        coords = tuple(coords)
        if not coords:
            raise BadIndex("a truncated point needs depth >= 1")
        ps = terms(seq, len(coords) - 1)
        for n in range(len(coords) - 1):
            if angle_scale(coords[n + 1], ps[n]) != coords[n]:
                raise NotCompatible("z_%d = %s is not z_%d ** %d = %s" % (
                    n + 1, coords[n], n + 2, ps[n], angle_scale(coords[n + 1], ps[n])))
        self.seq = seq
        self.coords = coords

    @classmethod
    def _make(cls, seq, coords):
        # for results of homomorphisms, which keep compatibility
        x = cls.__new__(cls)
        x.seq = seq
        x.coords = tuple(coords)
        return x

    @property
    def depth(self):
        return len(self.coords)

    @property
    def order(self):
        return point_order(self)

    def sort_key(self):
        return tuple([a.value for a in self.coords])

    def infoTuple(self):
        return (format_spec(self.seq),) + tuple([str(a) for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoint):
            return NotImplemented
        return self.seq == other.seq and self.coords == other.coords

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.seq, self.coords))

    def __str__(self):
        return "(%s)" % (", ".join([str(a) for a in self.coords]),)

    def __repr__(self):
        return "TruncatedPoint%r" % (self.infoTuple(),)

    def to_json(self):
        return {"seq": format_spec(self.seq), "coords": [str(a) for a in self.coords]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(PrimeSeqSpec.parse(data["seq"]), [Angle.parse(c) for c in data["coords"]])


def make_point(P, coords):
    return TruncatedPoint(P, [a if isinstance(a, Angle) else Angle.parse(a) for a in coords])


def identity(P, depth):
    if depth < 1:
        raise BadIndex("depth must be >= 1, got %d" % (depth,))
    return TruncatedPoint._make(P, [ZERO] * depth)


def _check_same(x, y):
    if x.seq != y.seq:
        raise MismatchedSpec("%s vs %s" % (format_spec(x.seq), format_spec(y.seq)))
    if x.depth != y.depth:
        raise MismatchedDepth("depth %d vs %d" % (x.depth, y.depth))


def multiply(x, y):
    """the group operation, coordinatewise"""
    _check_same(x, y)
    return TruncatedPoint._make(x.seq, [angle_add(a, b) for a, b in zip(x.coords, y.coords)])


def inverse(x):
    return TruncatedPoint._make(x.seq, [angle_neg(a) for a in x.coords])


def point_order(x):
    """order of x in the group: the deepest coordinate's order, which every
    shallower coordinate's order divides"""
    return x.coords[-1].den


def extend_back(x, new_depth):
    """deepen x by canonical same-order lifts z_n+1 = phi_{p_n}(z_n)

    Raises NotCoprime at the first level whose bonding prime divides the
    order of the top coordinate; such a point has no canonical lift and has
    to be built some other way.
    """
    if new_depth < x.depth:
        raise BadIndex("cannot extend depth %d back to %d" % (x.depth, new_depth))
    coords = list(x.coords)
    for n in range(x.depth, new_depth):
        coords.append(angle_unscale(coords[-1], nth_prime(x.seq, n)))
    msg(2, "extend_back", x, "to depth", new_depth)
    return TruncatedPoint._make(x.seq, coords)


def bonding(P, m, n, a):
    """f_m^n: raise a level-n angle to the product p_m ... p_n-1"""
    if not 1 <= m <= n:
        raise BadIndices("bonding map f_%d^%d needs 1 <= m <= n" % (m, n))
    return angle_scale(a, partial_product(P, m, n))


def project(x, n):
    """pi_n"""
    if not 1 <= n <= x.depth:
        raise BadIndex("level %d of a depth-%d point" % (n, x.depth))
    return x.coords[n - 1]


def shift_iso(x, m):
    """(x_1, x_2, ...) -> (x_m, x_m+1, ...) over the sequence with the first
    m - 1 terms dropped"""
    if not 1 <= m <= x.depth:
        raise BadIndex("shift by %d of a depth-%d point" % (m, x.depth))
    return TruncatedPoint._make(shift(x.seq, m - 1), x.coords[m - 1:])
