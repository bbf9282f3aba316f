"""
Periodic points of the potency maps h^k_P.

Which points are periodic depends only on S(P) and k:

  * k == 1: every point is fixed.
  * some prime q of S(P) does not divide k: periodic points are dense,
    and WitnessBuilder produces one inside any basic open set.
  * otherwise the identity is the only periodic point.

Points of period dividing m are the kernel of h^(k^m - 1), so counting
them is a degree computation.  orbit() iterates h^k on a truncated point
and records the visited points in an altgraph ObjectGraph.
"""

from altgraph.ObjectGraph import ObjectGraph
from sympy import nextprime

from psolenoid import util
from psolenoid.circle import angle_scale, angle_unscale, arc_preimage_component, \
    multiplicative_order, roots_of_unity_in_arc
from psolenoid.covering import degree, potency
from psolenoid.primeseq import Empty, FiniteNonempty, Infinite, format_spec, in_s, \
    last_occurrence, nth_prime, partial_product, s_classification
from psolenoid.solenoid import TruncatedPoint, point_order
from psolenoid.util import BadIndex, QNotUsable, check_prime, factor, msg, msgin, msgout


def euler_totient(m):
    """q_1^(l_1-1) ... q_n^(l_n-1) (q_1-1) ... (q_n-1) for m = q_1^l_1 ... q_n^l_n"""
    if m < 1:
        raise ValueError("totient of %d" % (m,))
    result = 1
    for q, e in factor(m):
        result *= q ** (e - 1) * (q - 1)
    return result


class PeriodicClass(object):
    """kind of periodic set, the proposition number it follows from (None
    for k == 1) and the primes of S(P) involved"""

    kind = None

    def __init__(self, proposition, reason, primes=()):
        self.proposition = proposition
        self.reason = reason
        self.primes = tuple(sorted(primes))

    def __eq__(self, other):
        return (type(self) is type(other) and self.proposition == other.proposition
                and self.primes == other.primes)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.proposition, self.primes))

    def __str__(self):
        if self.proposition is None:
            return self.kind
        return "%s (Prop %d)" % (self.kind, self.proposition)

    def __repr__(self):
        return "%s(%r, %r, %r)" % (type(self).__name__, self.proposition, self.reason, self.primes)

    def to_json(self):
        return {"kind": self.kind, "proposition": self.proposition, "reason": self.reason,
                "primes": list(self.primes)}


class AllPoints(PeriodicClass):
    kind = "all-points"


class OnlyIdentity(PeriodicClass):
    kind = "only-identity"


class Dense(PeriodicClass):
    kind = "dense"


def classify_periodic(P, k):
    if k == 1:
        return AllPoints(None, "h^1 is the identity map")
    s = s_classification(P)
    if isinstance(s, Infinite):
        return Dense(6, "infinitely many primes occur finitely often")
    if isinstance(s, Empty):
        return OnlyIdentity(5, "every prime occurs infinitely often")
    assert isinstance(s, FiniteNonempty)
    free = [q for q in s.primes if k % q]
    if free:
        return Dense(7, "%s occurs finitely often and does not divide %d" % (min(free), k), free)
    return OnlyIdentity(7, "%d is a multiple of every prime occurring finitely often" % (k,),
                        s.primes)


def choose_witness_prime(P, k):
    """the smallest prime occurring finitely often in P that does not divide k"""
    s = s_classification(P)
    if isinstance(s, FiniteNonempty):
        free = [q for q in s.primes if k % q]
        if free:
            return min(free)
    elif isinstance(s, Infinite):
        q = 2
        while not (in_s(P, q) and k % q):
            q = int(nextprime(q))
        return q
    raise QNotUsable("no prime of S(P) is prime to %d for %s" % (k, format_spec(P)))


class PeriodicWitness(object):
    def __init__(self, point, q, m, claimed_period, least_period, arc_level, arc):
        self.point = point
        self.q = q
        self.m = m
        self.claimed_period = claimed_period
        self.least_period = least_period
        self.arc_level = arc_level
        self.arc = arc

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "q": self.q,
            "m": self.m,
            "claimed_period": self.claimed_period,
            "least_period": self.least_period,
            "arc_level": self.arc_level,
            "arc": str(self.arc),
        }

    def __repr__(self):
        return "PeriodicWitness(%s, q=%d, m=%d, claimed_period=%d, least_period=%d)" % (
            self.point, self.q, self.m, self.claimed_period, self.least_period)


class WitnessBuilder(object):
    """builds a periodic point of h^k_P inside the basic open set
    { x : pi_arc_level(x) in arc }

    The point is q^m-torsion for a prime q of S(P) prime to k, so by Euler's
    theorem it has period q^(m-1)(q-1).
    """

    # levels kept past the level where the witness is seeded
    extra_depth = 3

    def __init__(self, P, k):
        self.P = P
        self.k = k

    def check(self, q):
        check_prime(q)
        if not in_s(self.P, q):
            raise QNotUsable("%d occurs infinitely often in %s" % (q, format_spec(self.P)))
        if self.k % q == 0:
            raise QNotUsable("%d divides k=%d" % (q, self.k))

    def seed_level(self, arc_level, q):
        """first level n >= arc_level with no occurrence of q at or above it"""
        return max(arc_level, last_occurrence(self.P, q) + 1)

    def seed(self, V, q):
        """(m, z): the least m with a q^m-torsion angle in V, and the first one"""
        m = 1
        while True:
            found = roots_of_unity_in_arc(q ** m, V)
            if found:
                return m, found[0]
            m += 1

    def build(self, arc_level, arc, q):
        P = self.P
        self.check(q)
        if arc_level < 1:
            raise BadIndex("arc level must be >= 1, got %d" % (arc_level,))
        msgin(1, "witness for", format_spec(P), "k=%d q=%d arc %s at level %d" % (
            self.k, q, arc, arc_level))
        n = self.seed_level(arc_level, q)
        V = arc_preimage_component(arc, partial_product(P, arc_level, n), 0)
        m, z = self.seed(V, q)
        msg(2, "level", n, "component", V, "seed", z, "m=%d" % (m,))

        depth = n + self.extra_depth
        coords = [None] * depth
        coords[n - 1] = z
        for j in range(n - 1, 0, -1):
            coords[j - 1] = angle_scale(coords[j], nth_prime(P, j))
        for j in range(n, depth):
            coords[j] = angle_unscale(coords[j - 1], nth_prime(P, j))
        point = TruncatedPoint._make(P, coords)
        claimed = euler_totient(q ** m)
        least = multiplicative_order(self.k, point_order(point))
        msgout(1, "witness", point, "period %d (least %d)" % (claimed, least))
        return PeriodicWitness(point, q, m, claimed, least, arc_level, arc)


def construct_periodic_witness(P, k, arc_level, arc, q):
    return WitnessBuilder(P, k).build(arc_level, arc, q)


def count_periodic(P, k, m):
    """number of points of period dividing m under h^k_P"""
    if k < 2 or m < 1:
        raise ValueError("count_periodic needs k >= 2 and m >= 1, got k=%d m=%d" % (k, m))
    return degree(P, k ** m - 1)


def is_periodic(x, k, n):
    """(h^k)^n(x) == x"""
    y = x
    for i in range(n):
        y = potency(y, k)
    return y == x


class NotFoundWithin(object):
    def __init__(self, max_steps):
        self.max_steps = max_steps

    def __eq__(self, other):
        return isinstance(other, NotFoundWithin) and self.max_steps == other.max_steps

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("NotFoundWithin", self.max_steps))

    def __repr__(self):
        return "NotFoundWithin(%d)" % (self.max_steps,)


class OrbitNode(object):
    def __init__(self, ident, step, point):
        self.graphident = ident
        self.step = step
        self.point = point

    def infoTuple(self):
        return (self.step, str(self.point))

    def __repr__(self):
        return "%s%r" % (type(self).__name__, self.infoTuple())


class OrbitGraph(ObjectGraph):
    """the points visited by h^k, with an edge from each point to its image"""

    def __init__(self, k):
        super(OrbitGraph, self).__init__(debug=util.debug)
        self.k = k

    def msg(self, level, s, *args):
        util.msg(level, s, *args)

    def visit(self, step, point):
        """add point; returns the earlier node if it was seen before"""
        ident = " ".join([str(a) for a in point.coords])
        seen = self.findNode(ident)
        if seen is not None:
            return seen
        self.createNode(OrbitNode, ident, step, point)
        return None

    def link(self, point, image):
        self.createReference(" ".join([str(a) for a in point.coords]),
                             " ".join([str(a) for a in image.coords]), edge_data=self.k)


class OrbitRecord(object):
    def __init__(self, pre_period, period, points):
        self.pre_period = pre_period
        self.period = period
        self.points = points

    def to_json(self):
        if isinstance(self.period, NotFoundWithin):
            period = None
        else:
            period = self.period
        return {
            "pre_period": self.pre_period,
            "period": period,
            "points": [p.to_json()["coords"] for p in self.points],
        }

    def __repr__(self):
        return "OrbitRecord(pre_period=%r, period=%r)" % (self.pre_period, self.period)


class Orbit(object):
    """iterates h^k from x until a point repeats"""

    max_steps = 1000

    def __init__(self, k, max_steps=None):
        self.k = k
        if max_steps is not None:
            self.max_steps = max_steps

    def run(self, x):
        graph = OrbitGraph(self.k)
        points = [x]
        graph.visit(0, x)
        for step in range(1, self.max_steps + 1):
            y = potency(points[-1], self.k)
            seen = graph.visit(step, y)
            graph.link(points[-1], y)
            if seen is not None:
                msg(2, "orbit of", x, "repeats", seen.point, "at step", step)
                return OrbitRecord(seen.step, step - seen.step, points)
            points.append(y)
        msg(1, "orbit of", x, "did not close within", self.max_steps, "steps")
        return OrbitRecord(None, NotFoundWithin(self.max_steps), points)


def orbit(x, k, max_steps=None):
    return Orbit(k, max_steps).run(x)


def orbit_period(x, k):
    """period of x under h^k from its order alone, when that order is prime to k"""
    return multiplicative_order(k, point_order(x))
