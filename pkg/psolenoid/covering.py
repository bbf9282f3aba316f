"""
The potency limit maps h^k_P and their fibers.

h^k_P raises every coordinate of a solenoid point to the k-th power.  It is
a finite-sheeted covering whose degree is the part of k made of primes that
occur only finitely often in P: primes occurring infinitely often contribute
homeomorphisms, the others contribute full k-fold sheets.  The fiber over
the identity is built constructively from canonical lifts, and checked
against a brute-force enumeration of the truncated inverse system.

Every finite-sheeted connected covering of a solenoid is equivalent to one
of these maps, so degree() also answers which coverings exist at all.
"""

from itertools import islice
from math import gcd

from psolenoid.circle import Angle, angle_scale, angle_unscale
from psolenoid.primeseq import (Cycle, format_spec, in_s, iter_terms, last_occurrence,
                                nth_prime, occurs_infinitely_often, terms)
from psolenoid.solenoid import TruncatedPoint, extend_back, multiply, point_order
from psolenoid.util import DepthTooShallow, NotCoprime, factor, max_exponent, msg, msgin, msgout


class FiberReport(object):
    """kernel of h^k_P at a finite depth

    representatives are sorted by their coordinate fractions; generator is
    an element of order `degree` (representatives[1] is one whenever the
    stabilization level is 1).
    """

    def __init__(self, k, degree, representatives, stabilization_level, generator):
        self.k = k
        self.degree = degree
        self.representatives = sorted(representatives, key=TruncatedPoint.sort_key)
        self.stabilization_level = stabilization_level
        self.generator = generator

    @property
    def depth(self):
        return self.representatives[0].depth

    def to_json(self):
        return {
            "k": self.k,
            "degree": self.degree,
            "stabilization_level": self.stabilization_level,
            "representatives": [r.to_json() for r in self.representatives],
        }

    def __eq__(self, other):
        if not isinstance(other, FiberReport):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        return "FiberReport(k=%d, degree=%d, stabilization_level=%d)" % (
            self.k, self.degree, self.stabilization_level)


def potency(x, k):
    """h^k_P: every coordinate raised to the k-th power"""
    return TruncatedPoint._make(x.seq, [angle_scale(a, k) for a in x.coords])


def finite_part(P, k):
    """product of the prime powers q^a || k with q occurring finitely often"""
    result = 1
    for q, e in factor(k):
        if in_s(P, q):
            result *= q ** e
    return result


def degree(P, k):
    """degree of the covering h^k_P"""
    return finite_part(P, k)


def admits_k_fold(P, k):
    return degree(P, k) == k


def is_homeomorphism(P, k):
    return degree(P, k) == 1


def stabilization_level(P, k):
    """n0: one past the last term that shares a prime with degree(P, k)"""
    s = degree(P, k)
    return 1 + max([last_occurrence(P, q) for q, e in factor(s)] or [0])


def fiber_over_identity(P, k, depth):
    """(h^k_P)^-1(e), generated by the point with z_n0 = 1/s and canonical
    lifts above n0"""
    s = degree(P, k)
    n0 = stabilization_level(P, k)
    if depth < n0:
        raise DepthTooShallow("fiber of h^%d needs depth >= %d, got %d" % (k, n0, depth))
    msgin(1, "fiber_over_identity", format_spec(P), "k=%d degree=%d n0=%d" % (k, s, n0))
    coords = [None] * depth
    coords[n0 - 1] = Angle(1, s)
    for n in range(n0 - 1, 0, -1):
        coords[n - 1] = angle_scale(coords[n], nth_prime(P, n))
    for n in range(n0, depth):
        coords[n] = angle_unscale(coords[n - 1], nth_prime(P, n))
    g = TruncatedPoint._make(P, coords)
    msg(2, "generator", g)
    reps = [potency(g, j) for j in range(s)]
    msgout(1, "fiber_over_identity done")
    return FiberReport(k, s, reps, n0, g)


def oracle_depth(P, k):
    """smallest depth fiber_oracle accepts"""
    if isinstance(P.tail, Cycle):
        return len(P.prefix) + len(P.tail.primes) * max_exponent(k) + 1
    return len(P.prefix) + 1


def _horizon(P, k, level):
    """number of terms from `level` on after which the images of Z/k under
    the bonding maps stop shrinking"""
    if isinstance(P.tail, Cycle):
        return len(P.tail.primes) * max_exponent(k)
    need = dict([(q, e) for q, e in factor(k) if occurs_infinitely_often(P, q)])
    count = 0
    it = islice(iter_terms(P), level - 1, None)
    while [e for e in need.values() if e > 0]:
        p = next(it)
        count += 1
        if p in need:
            need[p] -= 1
    return count


def fiber_oracle(P, k, depth):
    """(h^k_P)^-1(e) by brute force over k-torsion coordinate tuples

    A tuple (a_1/k, ..., a_d/k) with a_n = p_n a_n+1 mod k is determined by
    a_d, so the tuples are enumerated from the top level down.  Only a_d in
    the stable image c*(Z/k) extend to points of the solenoid, where c is
    gcd(p_d ... p_d+T-1, k) once the window T has saturated every prime.
    """
    if depth < oracle_depth(P, k):
        raise DepthTooShallow("oracle for h^%d needs depth >= %d, got %d" % (
            k, oracle_depth(P, k), depth))
    T = _horizon(P, k, depth)
    ps = terms(P, depth + T)
    product = 1
    for p in ps[depth - 1:]:
        product *= p
    c = gcd(product, k)
    msg(1, "fiber_oracle", format_spec(P), "k=%d depth=%d horizon=%d stable gcd %d" % (
        k, depth, T, c))

    reps = []
    for top in range(0, k, c):
        residues = [top]
        for n in range(depth - 1, 0, -1):
            residues.append(ps[n - 1] * residues[-1] % k)
        residues.reverse()
        reps.append(TruncatedPoint._make(P, [Angle(a, k) for a in residues]))

    n0 = 1
    while len(set([r.coords[:n0] for r in reps])) != len(reps):
        n0 += 1
    generator = None
    for r in sorted(reps, key=TruncatedPoint.sort_key):
        if point_order(r) == len(reps):
            generator = r
            break
    return FiberReport(k, len(reps), reps, n0, generator)


def fiber_over_point(y, k):
    """(h^k_P)^-1(y) for a torsion point y whose order is prime to k

    phi_k(y) is one preimage; the whole fiber is its coset of the kernel.
    """
    N = point_order(y)
    if gcd(k, N) != 1:
        raise NotCoprime("order %d of %s shares a factor with %d" % (N, y, k))
    if k == 1:
        return [y]
    z = TruncatedPoint._make(y.seq, [angle_unscale(a, k) for a in y.coords])
    kernel = fiber_over_identity(y.seq, k, y.depth)
    return sorted([multiply(z, r) for r in kernel.representatives], key=TruncatedPoint.sort_key)


def preimage_oracle(y, k):
    """count the solutions x of h^k(x) = y at the depth of y by brute force

    y is lifted canonically past the horizon, where all k candidate k-th
    roots of the top coordinate are tried; projecting them back down gives
    the distinct truncated solutions.
    """
    P = y.seq
    if y.depth < oracle_depth(P, k):
        raise DepthTooShallow("preimage oracle for h^%d needs depth >= %d" % (k, oracle_depth(P, k)))
    T = _horizon(P, k, y.depth)
    top = extend_back(y, y.depth + T).coords[-1]
    ps = terms(P, y.depth + T)
    found = set()
    for j in range(k):
        coords = [Angle.from_fraction((top.value + j) / k)]
        for n in range(y.depth + T - 1, 0, -1):
            coords.append(angle_scale(coords[-1], ps[n - 1]))
        coords.reverse()
        found.add(TruncatedPoint._make(P, coords[:y.depth]))
    msg(2, "preimage_oracle", y, "k=%d: %d solutions" % (k, len(found)))
    return len(found)
