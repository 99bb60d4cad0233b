import random
from fractions import Fraction

import sympy

from hvwhittaker.linalg import IncrementalSpan, nullspace, rank, reduced_row_echelon, row_echelon


def random_rows(rng, n_rows, n_cols, density=0.5):
    rows = []
    for _ in range(n_rows):
        rows.append({c: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                     for c in range(n_cols) if rng.random() < density})
    return rows


def dense(rows, n_cols):
    return sympy.Matrix([[r.get(c, 0) for c in range(n_cols)] for r in rows])


def test_rank_matches_sympy():
    rng = random.Random(1)
    for _ in range(40):
        n_rows, n_cols = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_rows(rng, n_rows, n_cols)
        assert rank(rows) == dense(rows, n_cols).rank()


def test_nullspace_is_kernel_basis():
    rng = random.Random(2)
    for _ in range(40):
        n_cols = rng.randint(1, 7)
        rows = random_rows(rng, rng.randint(1, 6), n_cols)
        cols = list(range(n_cols))
        basis = nullspace(rows, cols)
        assert len(basis) == n_cols - rank(rows)
        for vec in basis:
            for r in rows:
                assert sum(v * vec.get(c, 0) for c, v in r.items()) == 0
        if basis:
            assert rank(basis) == len(basis)


def test_echelon_is_fraction_free():
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: Fraction(2), 1: Fraction(4, 3)}]
    piv = row_echelon(rows)
    assert piv == {0: {0: 3, 1: 2}}
    assert all(isinstance(v, int) for r in piv.values() for v in r.values())


def test_rref_has_unit_pivots():
    rref = reduced_row_echelon([{0: 2, 1: 4, 2: 2}, {1: 1, 2: 3}])
    assert rref == {0: {0: 1, 2: -5}, 1: {1: 1, 2: 3}}


def test_column_keys_may_be_tuples():
    rows = [{("a", 2): 1, ("b", 0): -1}]
    assert nullspace(rows, [("a", 2), ("b", 0)]) == [{("b", 0): 1, ("a", 2): 1}]


def test_incremental_span_witness():
    rng = random.Random(3)
    span = IncrementalSpan()
    vecs = random_rows(rng, 4, 8, density=0.6)
    for n, v in enumerate(vecs):
        span.add(v, n)
    target = {}
    for n, v in enumerate(vecs):
        for c, x in v.items():
            target[c] = target.get(c, 0) + (n + 1) * x
    combo = span.express(target)
    assert combo is not None
    rebuilt = {}
    for n, k in combo.items():
        for c, x in vecs[n].items():
            rebuilt[c] = rebuilt.get(c, 0) + k * x
    assert {c: x for c, x in rebuilt.items() if x} == {c: x for c, x in target.items() if x}
    assert not span.add(target, "again")
    assert span.express({99: 1}) is None and not span.contains({99: 1})
