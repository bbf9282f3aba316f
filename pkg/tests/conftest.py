import random

import pytest
from hypothesis import settings

from psolenoid.circle import Angle, angle_scale
from psolenoid.primeseq import parse_spec, terms
from psolenoid.solenoid import TruncatedPoint

settings.register_profile("psolenoid", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("psolenoid")

GRID_TEXT = [
    "cycle=[2]",
    "cycle=[3]",
    "cycle=[2,3]",
    "prefix=[5];cycle=[2]",
    "prefix=[3];cycle=[2]",
    "universal",
    "universal=exclude[2]",
    "universal=exclude[2,3]",
]

GRID = [parse_spec(t) for t in GRID_TEXT]


def random_point(P, depth, rng, max_den=500):
    """a random torsion point: pick the deepest coordinate, scale downwards"""
    top = Angle(rng.randrange(max_den), rng.randint(1, max_den))
    ps = terms(P, depth - 1)
    coords = [top]
    for n in range(depth - 1, 0, -1):
        coords.append(angle_scale(coords[-1], ps[n - 1]))
    coords.reverse()
    return TruncatedPoint(P, coords)


@pytest.fixture(params=GRID, ids=GRID_TEXT)
def spec(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240601)
