import random
from fractions import Fraction

import pytest

from conftest import random_vector
from hvwhittaker.algebra import I, L, LieElement, Z, bracket
from hvwhittaker.modules import BasisIndex, CentralCharacter, ModuleVector, Reduced, defect
from hvwhittaker.partitions import Partition, Pseudopartition
from hvwhittaker.syntax import (
    ParseError,
    WordSum,
    format_element,
    format_rational,
    parse_element,
    parse_generator,
    parse_lie,
)
from hvwhittaker.uea import normal_form


def test_parse_basis_vector(universal):
    v = parse_element("L[-2]*L[0]^2*I[-1]*w", universal)
    idx = BasisIndex.from_partitions(Pseudopartition({0: 2, 2: 1}), Partition({1: 1}))
    assert v == ModuleVector.basis(universal, idx)


def test_parse_two_terms(universal):
    v = parse_element("3/2*z1*w - L[-1]*w", universal)
    assert len(v) == 2
    assert v.coeff(BasisIndex(t=(0, 1, 0, 0))) == Fraction(3, 2)
    assert v.coeff(BasisIndex(ls=(-1,))) == -1


def test_parse_applies_action(universal):
    # unordered words are acted out, not read as basis labels
    assert parse_element("L[1]*L[-1]*w", universal) == parse_element("-2*L[0]*w + 2*L[-1]*w", universal)


@pytest.mark.parametrize("text", [
    "L[1]*w + I[2]", "", "L[1", "L[x]", "w*L[1]", "3/0*w", "z5*w", "L[1] L[2]", "2*",
])
def test_parse_errors(text, universal):
    with pytest.raises(ParseError):
        parse_element(text, universal)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_element("L[1] +\n  Q")
    assert (info.value.line, info.value.column) == (2, 3)


def test_module_text_needs_module():
    with pytest.raises(ValueError):
        parse_element("w")


def test_algebra_elements():
    parsed = parse_element("I[1]*I[-1]*L[0] - 2")
    assert isinstance(parsed, WordSum)
    assert parsed.to_uea() == normal_form((I(1), I(-1), L(0))) - normal_form(()) * 2
    assert parse_lie("2*L[1] - z0 + 1/3*z2") == (LieElement.of(L(1), 2) - LieElement.of(I(0))
                                                  + LieElement.of(Z(2), Fraction(1, 3)))
    assert parse_generator(" I[-3] ") == I(-3)
    with pytest.raises(ParseError):
        parse_generator("2*L[1]")
    with pytest.raises(ValueError):
        parse_lie("L[1]*L[2]")


def test_format_examples(universal):
    assert format_element(defect(L(1), parse_element("L[-1]*w", universal))) == "-2*L[0]*w"
    assert format_element(ModuleVector.zero(universal)) == "0"
    assert format_element(bracket(L(2), L(-2))) == "-4*L[0] + 1/2*z1"
    assert format_element(normal_form((I(1), I(-1), L(0)))) == "z3*L[0] + L[0]*I[-1]*I[1]"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def test_format_follows_basis_order(universal):
    v = parse_element("I[-1]*w + w + L[-1]*w + z0*w", universal)
    assert format_element(v) == "w + z0*w + I[-1]*w + L[-1]*w"


@pytest.mark.parametrize("spec_kind", ["universal", "reduced"])
def test_round_trip(spec_kind, psi):
    from hvwhittaker.modules import Universal

    spec = Universal(psi) if spec_kind == "universal" else Reduced(psi, CentralCharacter(1, 2, 3, 4))
    rng = random.Random(17)
    for _ in range(100):
        v = random_vector(spec, rng, degree=4, l0=3, terms=rng.randint(0, 4), zdeg=2)
        assert parse_element(format_element(v), spec) == v


def test_round_trip_algebra():
    rng = random.Random(19)
    gens = [L(k) for k in range(-3, 4)] + [I(k) for k in range(-3, 4)] + [Z(1), Z(2), Z(3)]
    for _ in range(100):
        u = normal_form(())
        u = u * 0
        for _ in range(rng.randint(0, 3)):
            word = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            u = u + normal_form(word) * Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        text = format_element(u)
        if u:
            assert parse_element(text).to_uea() == u
        else:
            assert text == "0"
