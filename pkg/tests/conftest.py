import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hvwhittaker.algebra import Generator  # noqa: E402
from hvwhittaker.modules import BasisIndex, ModuleVector, Reduced, Universal, make_psi  # noqa: E402
from hvwhittaker.partitions import enumerate_pairs  # noqa: E402


def as_tuple(g: Generator):
    return (g.kind, g.index)


def psi_dict(psi):
    return {("L", 1): psi.psi_l1, ("L", 2): psi.psi_l2, ("I", 1): psi.psi_i1}


def uea_as_words(u):
    return {tuple(as_tuple(g) for g in m.reading_word()): c for m, c in u.items()}


def vector_as_keys(v):
    return {(idx.t, idx.ls, idx.is_): c for idx, c in v.items()}


def basis_word(idx: BasisIndex):
    w = []
    for i, e in enumerate(idx.t):
        w += [("I", 0) if i == 0 else ("Z", i)] * e
    return tuple(w) + tuple(("L", k) for k in idx.ls) + tuple(("I", k) for k in idx.is_)


def random_generator(rng: random.Random, lo=-4, hi=4, central=True) -> Generator:
    choices = ["L", "I"] + (["Z"] if central else [])
    kind = rng.choice(choices)
    if kind == "Z":
        return Generator("Z", rng.randint(1, 3))
    return Generator(kind, rng.randint(lo, hi))


def random_vector(spec, rng: random.Random, degree=3, l0=2, terms=3, zdeg=0) -> ModuleVector:
    pairs = enumerate_pairs(degree, l0)
    out = ModuleVector.zero(spec)
    for _ in range(terms):
        lam, mu = rng.choice(pairs)
        t = (0, 0, 0, 0)
        if zdeg and isinstance(spec, Universal):
            t = tuple(rng.randint(0, 1) if i < zdeg else 0 for i in range(4))
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        out = out + ModuleVector.basis(spec, BasisIndex.from_partitions(lam, mu, t)) * coeff
    return out


@pytest.fixture
def psi():
    return make_psi(2, 3, 5)


@pytest.fixture
def universal(psi):
    return Universal(psi)


@pytest.fixture
def reduced(psi):
    return Reduced(psi)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
