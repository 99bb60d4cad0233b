import random
from fractions import Fraction
from itertools import product

import pytest

import oracles
from conftest import as_tuple, basis_word, psi_dict, random_generator, random_vector, vector_as_keys
from hvwhittaker.algebra import I, L, Z, bracket, generators_in_range
from hvwhittaker.modules import (
    CYCLIC,
    BasisIndex,
    CentralCharacter,
    InvalidPsiError,
    ModuleVector,
    Reduced,
    Universal,
    act,
    act_uea,
    act_word,
    annihilator_generators,
    basis_enumerate,
    central_monomials,
    defect,
    evaluate_central,
    make_psi,
    max_l0,
    maxdeg,
)
from hvwhittaker.partitions import Partition, Pseudopartition, enumerate_pairs
from hvwhittaker.uea import UEAElement, normal_form

NEG_INF = float("-inf")


def vec(spec, ls=(), is_=(), t=(0, 0, 0, 0), c=1):
    return ModuleVector(spec, {BasisIndex(t=t, ls=tuple(ls), is_=tuple(is_)): c})


def w(spec, c=1):
    return ModuleVector.cyclic(spec, c)


# -- psi ----------------------------------------------------------------------

def test_psi_kinds():
    assert make_psi(2, 3, 5).nonsingular
    singular = make_psi(0, 0, 5)
    assert not singular.nonsingular and not singular.is_zero
    Reduced(singular)
    with pytest.raises(InvalidPsiError):
        Universal(singular)
    with pytest.raises(InvalidPsiError):
        Reduced(make_psi(0, 0, 0))


def test_psi_extra_values():
    assert make_psi(2, 3, 5, extra={L(3): 0, I(2): 0}) == make_psi(2, 3, 5)
    with pytest.raises(InvalidPsiError):
        make_psi(2, 3, 5, extra={L(3): 1})
    with pytest.raises(InvalidPsiError):
        make_psi(2, 3, 5, extra={L(-1): 0})
    with pytest.raises(InvalidPsiError):
        make_psi(2, 3, 5, extra={L(1): 2})


def test_psi_values(psi):
    assert [psi(g) for g in (L(1), L(2), I(1), L(3), I(2), L(0), I(-1))] == [2, 3, 5, 0, 0, 0, 0]


# -- action examples ----------------------------------------------------------

def test_act_examples(universal, psi):
    assert act(L(1), w(universal)) == w(universal, 2)
    assert act(I(2), vec(universal, ls=(-1,))) == w(universal, -10)
    assert act(I(0), vec(universal, ls=(-1,))) == vec(universal, ls=(-1,), t=(1, 0, 0, 0))
    red = Reduced(psi, CentralCharacter(7, 0, 0, 0))
    assert act(I(0), vec(red, ls=(-1,))) == vec(red, ls=(-1,), c=7)


def test_act_uea_examples(universal):
    assert act_uea(UEAElement.one(), vec(universal, ls=(-1,))) == vec(universal, ls=(-1,))
    assert act_uea(normal_form((L(-1), L(1))), w(universal)) == vec(universal, ls=(-1,), c=2)
    assert act_uea(normal_form((L(1), L(-1))), w(universal)) == act(L(1), act(L(-1), w(universal)))


def test_act_word_order(universal):
    # words apply right to left, like a product acting on the left
    assert act_word((L(-1), L(1)), w(universal)) == vec(universal, ls=(-1,), c=2)


def test_defect_examples(universal, reduced):
    assert defect(I(1), w(universal)) == 0
    assert defect(L(1), vec(universal, ls=(-1,))) == vec(universal, ls=(0,), c=-2)
    assert defect(I(2), vec(reduced, ls=(-1,))) == w(reduced, -10)
    lhs = defect(L(3), vec(universal, ls=(-1, -1)))
    assert lhs == w(universal, 24) - vec(universal, ls=(-1,), c=24)


def test_degree_functions(universal):
    assert maxdeg(vec(universal, ls=(-2,), is_=(-1,), t=(0, 1, 0, 0))) == 3
    assert maxdeg(ModuleVector.zero(universal)) == NEG_INF
    assert maxdeg(vec(universal, ls=(0, 0, 0))) == 0
    assert max_l0(vec(universal, ls=(0, 0, 0)) + vec(universal, ls=(-1, 0))) == 3
    assert max_l0(w(universal)) == 0
    assert max_l0(ModuleVector.zero(universal)) == NEG_INF


def test_evaluate_central(universal, psi):
    xi = CentralCharacter(7, 0, 0, 0)
    assert evaluate_central(vec(universal, t=(1, 0, 0, 0)), xi) == w(Reduced(psi, xi), 7)
    for xi in (CentralCharacter(1, 2, 3, 4), CentralCharacter(0, Fraction(-1, 2), 0, 9)):
        v = vec(universal, ls=(-1,), t=(0, 1, 0, 0)) - vec(universal, ls=(-1,), c=xi.xi1)
        assert evaluate_central(v, xi) == 0


def test_evaluate_central_commutes_with_act(universal, psi):
    rng = random.Random(3)
    xi = CentralCharacter(1, -2, Fraction(1, 3), 4)
    red = Reduced(psi, xi)
    for _ in range(100):
        g = random_generator(rng)
        v = random_vector(universal, rng, zdeg=2)
        lhs = evaluate_central(act(g, v), xi)
        rhs = act(g, evaluate_central(v, xi))
        assert lhs == rhs and lhs.spec == red


# -- independent oracle -------------------------------------------------------

@pytest.mark.parametrize("xi", [None, (1, 2, 3, 4)])
def test_action_matches_naive_straightening(psi, xi):
    spec = Universal(psi) if xi is None else Reduced(psi, CentralCharacter(*xi))
    rng = random.Random(11)
    gens = list(generators_in_range(-3, 3))
    for idx in basis_enumerate(spec, 3, 1, 1 if xi is None else 0):
        word = tuple(rng.choice(gens) for _ in range(rng.randint(1, 3)))
        got = vector_as_keys(act_word(word, ModuleVector.basis(spec, idx)))
        expected = oracles.module_action(tuple(as_tuple(g) for g in word), basis_word(idx),
                                         psi_dict(psi), xi)
        assert got == expected, (word, idx)


# -- structural properties ----------------------------------------------------

def test_module_axiom(universal):
    rng = random.Random(5)
    gens = list(generators_in_range(-4, 4))
    vectors = [random_vector(universal, rng, zdeg=1) for _ in range(50)]
    for g, h in product(gens, repeat=2):
        v = rng.choice(vectors)
        lhs = act(g, act(h, v)) - act(h, act(g, v))
        assert lhs == act_uea(UEAElement.from_lie(bracket(g, h)), v), (g, h, v)


def test_cyclic_vector_is_faithful(universal, psi):
    for g in generators_in_range(1, 8, central=False):
        assert act(g, w(universal)) == w(universal, psi(g))


def test_central_scalars(psi):
    xi = CentralCharacter(Fraction(1, 2), 2, -3, 4)
    spec = Reduced(psi, xi)
    rng = random.Random(9)
    for _ in range(30):
        v = random_vector(spec, rng)
        for i, value in enumerate(xi.as_tuple()):
            assert act(Z(i), v) == v * value


def test_reduced_rejects_central_exponents(reduced):
    with pytest.raises(ValueError):
        vec(reduced, t=(1, 0, 0, 0))


def test_mixing_modules_fails(universal, reduced):
    with pytest.raises(ValueError):
        w(universal) + w(reduced)


def test_degree_bounds(universal):
    # raising operators never raise the degree; lowering ones raise it by at most the index
    for idx in basis_enumerate(universal, 3, 2):
        v = ModuleVector.basis(universal, idx)
        for g in generators_in_range(-3, 5, central=False):
            out = act(g, v)
            if out:
                assert maxdeg(out) <= idx.degree + max(0, -g.index)


def test_dot_action_confinement_and_vanishing(universal):
    for lam, mu in enumerate_pairs(3, 2):
        idx = BasisIndex.from_partitions(lam, mu, (0, 1, 0, 0))
        v = ModuleVector.basis(universal, idx)
        size = lam.size + mu.size
        for n in range(1, 9):
            for g in (L(n), I(n)):
                d = defect(g, v)
                if n > size + 2:
                    assert d == 0, (g, idx)
                for j in d.terms:
                    assert j.degree + j.l0 <= size + lam(0), (g, idx)


# -- bases --------------------------------------------------------------------

def test_central_monomials():
    ts = central_monomials(2)
    assert len(ts) == oracles.central_count(2) == 15
    assert ts[:5] == [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def test_basis_examples(universal, reduced):
    assert basis_enumerate(reduced, 0, 0) == [CYCLIC]
    assert len(basis_enumerate(universal, 0, 0, 1)) == 5
    assert len(basis_enumerate(universal, 3, 3, 2)) == 15 * oracles.count_pairs(3, 3)


def test_basis_index_from_partitions():
    idx = BasisIndex.from_partitions(Pseudopartition({0: 2, 2: 1}), Partition({1: 1}))
    assert idx.ls == (-2, 0, 0) and idx.is_ == (-1,)
    assert (idx.degree, idx.l0, idx.mu_parts) == (3, 2, 1)
    assert repr(idx) == "L[-2]*L[0]^2*I[-1]*w"


def test_annihilator(psi):
    spec = Reduced(psi, CentralCharacter(1, 2, 3, 4))
    gens = annihilator_generators(spec, 8)
    assert len(gens) == 4 + 16
    for g, c in gens:
        assert act(g, w(spec)) == w(spec, c)
