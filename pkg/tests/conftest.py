import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tightclosure.idealops import PresentedRing, RingFlags
from tightclosure.polyfield import PolyRing

ALL_FLAGS = RingFlags(domain=True, normal=True, graded_reduced=True, cm=True)


@pytest.fixture
def rng():
    return random.Random(20010214)


@pytest.fixture
def fermat5():
    return PresentedRing.define(5, ["x", "y", "z"],
                                relations=["x^3 + y^3 + z^3"], flags=ALL_FLAGS)


@pytest.fixture
def fermat2():
    return PresentedRing.define(2, ["x", "y", "z"],
                                relations=["x^3 + y^3 + z^3"], flags=ALL_FLAGS)


@pytest.fixture
def quadric5():
    return PresentedRing.define(5, ["x", "y", "z"],
                                relations=["x*y - z^2"], flags=ALL_FLAGS)


@pytest.fixture
def quadric3():
    return PresentedRing.define(3, ["x", "y", "z"],
                                relations=["x*y - z^2"], flags=ALL_FLAGS)


@pytest.fixture
def regular5():
    return PresentedRing.define(5, ["x", "y"], flags=ALL_FLAGS)


def random_poly(rng: random.Random, ring: PolyRing, max_degree: int = 3,
                max_terms: int = 4, homogeneous: bool = False):
    """Seeded random polynomial with small support."""
    n = ring.nvars
    p = ring.field.p
    nterms = rng.randint(1, max_terms)
    terms = {}
    deg = rng.randint(0, max_degree) if homogeneous else None
    for _ in range(nterms):
        if homogeneous:
            exps = _random_partition(rng, deg, n)
        else:
            exps = tuple(rng.randint(0, max_degree) for _ in range(n))
            while sum(exps) > max_degree:
                exps = tuple(rng.randint(0, max_degree) for _ in range(n))
        terms[exps] = rng.randint(1, p - 1) if p > 1 else 1
    from tightclosure.polyfield import Polynomial
    return Polynomial(ring, terms)


def _random_partition(rng, total, parts):
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    vals = []
    prev = 0
    for c in cuts:
        vals.append(c - prev)
        prev = c
    vals.append(total - prev)
    return tuple(vals)


def random_nonzero_poly(rng, ring, **kw):
    f = random_poly(rng, ring, **kw)
    while f.is_zero():
        f = random_poly(rng, ring, **kw)
    return f
