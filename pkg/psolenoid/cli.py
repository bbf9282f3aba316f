"""command line front end: psolenoid VERB [options]

Every verb is a pure query.  Output is plain text, or JSON with --json.
Exit status is 0 on success, 1 when the library rejects the question
(the error class is echoed on stderr) and 2 when the command line or a
sequence spec does not parse.
"""

import argparse
import json
import sys

from psolenoid import util
from psolenoid.circle import Arc
from psolenoid.covering import (degree, fiber_oracle, fiber_over_identity, fiber_over_point,
                                oracle_depth, stabilization_level)
from psolenoid.dynamics import (NotFoundWithin, classify_periodic, choose_witness_prime,
                                construct_periodic_witness, count_periodic, euler_totient, orbit)
from psolenoid.padic import PadicRational, divide_witness, is_member, is_q_divisible
from psolenoid.primeseq import PrimeSeqSpec, equivalent, format_spec, shift
from psolenoid.solenoid import extend_back, make_point
from psolenoid.util import NotPrime, SpecSyntaxError, check_prime


def parse_seq_spec(text):
    """[prefix=[p,...];](cycle=[p,...]|universal[=exclude[p,...]])"""
    return PrimeSeqSpec.parse(text)


def _point(args):
    return make_point(parse_seq_spec(args.seq), [c for c in args.coords.split(",") if c.strip()])


def _points_json(points):
    return [p.to_json()["coords"] for p in points]


def _yes(flag):
    return "true" if flag else "false"


def cmd_degree(args):
    d = degree(parse_seq_spec(args.seq), args.k)
    return str(d), {"seq": args.seq, "k": args.k, "degree": d}


def cmd_fiber(args):
    P = parse_seq_spec(args.seq)
    if args.oracle:
        depth = max(oracle_depth(P, args.k), stabilization_level(P, args.k), args.depth or 0)
        report = fiber_oracle(P, args.k, depth)
    else:
        depth = max(stabilization_level(P, args.k), args.depth or 0)
        report = fiber_over_identity(P, args.k, depth)
    lines = ["degree %d" % (report.degree,),
             "stabilization_level %d" % (report.stabilization_level,)]
    lines.extend([str(r) for r in report.representatives])
    payload = report.to_json()
    payload["depth"] = depth
    return "\n".join(lines), payload


def cmd_classify(args):
    c = classify_periodic(parse_seq_spec(args.seq), args.k)
    return str(c), c.to_json()


def cmd_witness(args):
    P = parse_seq_spec(args.seq)
    q = args.q
    if q is None:
        q = choose_witness_prime(P, args.k)
    w = construct_periodic_witness(P, args.k, args.arc_level, Arc.parse(args.arc), q)
    if args.depth and args.depth > w.point.depth:
        w.point = extend_back(w.point, args.depth)
    lines = ["point %s" % (w.point,),
             "q %d" % (w.q,),
             "m %d" % (w.m,),
             "claimed_period %d" % (w.claimed_period,),
             "least_period %d" % (w.least_period,)]
    return "\n".join(lines), w.to_json()


def cmd_orbit(args):
    rec = orbit(_point(args), args.k, args.max_steps)
    if isinstance(rec.period, NotFoundWithin):
        text = "period not found within %d steps" % (rec.period.max_steps,)
    else:
        text = "pre_period %d\nperiod %d" % (rec.pre_period, rec.period)
    return text, rec.to_json()


def cmd_equiv(args):
    e = equivalent(parse_seq_spec(args.seq1), parse_seq_spec(args.seq2))
    return ("equivalent" if e else "not equivalent"), {"equivalent": e}


def cmd_member(args):
    x = PadicRational.parse(args.x)
    r = is_member(parse_seq_spec(args.seq), x)
    return _yes(r), {"x": str(x), "member": r}


def cmd_divisible(args):
    P = parse_seq_spec(args.seq)
    q = check_prime(args.q)
    if args.x is None:
        r = is_q_divisible(P, q)
        return _yes(r), {"q": q, "divisible": r}
    w = divide_witness(P, PadicRational.parse(args.x), q)
    if w is None:
        return "no witness", {"q": q, "witness": None}
    return str(w), {"q": q, "witness": str(w)}


def cmd_count_periodic(args):
    n = count_periodic(parse_seq_spec(args.seq), args.k, args.m)
    return str(n), {"k": args.k, "m": args.m, "count": n}


def cmd_totient(args):
    t = euler_totient(args.m)
    return str(t), {"m": args.m, "totient": t}


def cmd_preimage(args):
    found = fiber_over_point(_point(args), args.k)
    return "\n".join([str(p) for p in found]), {"k": args.k, "points": _points_json(found)}


def cmd_shift(args):
    s = format_spec(shift(parse_seq_spec(args.seq), args.m))
    return s, {"seq": s}


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1, got %s" % (text,))
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected an integer >= 0, got %s" % (text,))
    return value


def make_parser():
    from psolenoid import __version__

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("-d", "--debug", action="count", default=0,
                        help="more debug output on stderr (repeatable)")
    common.add_argument("-q", "--quiet", action="store_true", help="no debug output")

    parser = argparse.ArgumentParser(prog="psolenoid",
                                     description="exact computations on P-adic solenoids")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def verb(name, help):
        return sub.add_parser(name, parents=[common], help=help)

    p = verb("degree", "degree of h^k")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = verb("fiber", "the fiber of h^k over the identity")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--depth", type=_positive, help="at least this many levels")
    p.add_argument("--oracle", action="store_true", help="enumerate by brute force")

    p = verb("classify", "periodic points of h^k")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = verb("witness", "a periodic point of h^k inside an arc at some level")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--arc-level", type=_positive, required=True)
    p.add_argument("--arc", required=True, help="start+length, e.g. 1/10+1/10")
    p.add_argument("--q", type=int, help="torsion prime; default: smallest usable one")
    p.add_argument("--depth", type=_positive, help="at least this many levels")

    p = verb("orbit", "iterate h^k on a truncated point")
    p.add_argument("--seq", required=True)
    p.add_argument("--coords", required=True, help="comma separated angles, e.g. 1/2,1/4")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-steps", type=_positive, default=None)

    p = verb("equiv", "are two sequences equivalent")
    p.add_argument("--seq1", required=True)
    p.add_argument("--seq2", required=True)

    p = verb("member", "is x a P-adic rational")
    p.add_argument("--seq", required=True)
    p.add_argument("--x", required=True)

    p = verb("divisible", "q-divisibility of F_P, or x/q in F_P")
    p.add_argument("--seq", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--x")

    p = verb("count-periodic", "number of points of period dividing m")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=_positive, required=True)

    p = verb("totient", "Euler's totient")
    p.add_argument("--m", type=_positive, required=True)

    p = verb("preimage", "all x with h^k(x) = y for a torsion point y")
    p.add_argument("--seq", required=True)
    p.add_argument("--coords", required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = verb("shift", "the sequence with its first m terms dropped")
    p.add_argument("--seq", required=True)
    p.add_argument("--m", type=_natural, required=True)

    return parser


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as err:
        return err.code

    util.debug = 0 if args.quiet else args.debug
    handler = globals()["cmd_" + args.verb.replace("-", "_")]
    try:
        text, payload = handler(args)
    except (SpecSyntaxError, NotPrime) as err:
        stderr.write("error: %s: %s\n" % (type(err).__name__, err))
        return 2
    except (util.error, ValueError) as err:
        stderr.write("error: %s: %s\n" % (type(err).__name__, err))
        return 1

    if args.json:
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return 0
