import itertools
import math
import random
from fractions import Fraction

import pytest

from grcat.intlinalg import (SmithDecomposition, left_kernel, matmul,
                             smith_normal_form, solve_mod1, solve_with_snf)
from grcat.roots import Root


def is_diagonal_with_chain(d):
    rows, cols = len(d), len(d[0]) if d else 0
    for i in range(rows):
        for j in range(cols):
            if i != j and d[i][j]:
                return False
    diag = [d[i][i] for i in range(min(rows, cols))]
    if any(v < 0 for v in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def test_known_forms():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == [2, 4]
    assert smith_normal_form([[1, 2], [3, 4]]).diagonal == [1, 2]
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    assert smith_normal_form([[1, 0], [0, 1]]).diagonal == [1, 1]
    assert smith_normal_form([[2, 4, 6]]).diagonal == [2]
    assert smith_normal_form([[3], [6]]).diagonal == [3]


def test_transforms_multiply_out():
    m = [[2, 4], [6, 8]]
    snf = smith_normal_form(m)
    assert matmul(matmul(snf.u, m), snf.v) == snf.d
    assert det2(snf.u) in (1, -1)
    assert det2(snf.v) in (1, -1)


def test_random_matrices_reach_normal_form():
    rng = random.Random(3)
    for _ in range(120):
        rows = rng.randrange(1, 9)
        cols = rng.randrange(1, 9)
        m = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        snf = smith_normal_form(m)
        assert is_diagonal_with_chain(snf.d)
        assert matmul(matmul(snf.u, m), snf.v) == snf.d


def _det(m):
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def test_diagonal_matches_determinantal_divisors():
    # product d_1..d_k equals the gcd of all k x k minors
    rng = random.Random(11)
    for _ in range(60):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        diag = smith_normal_form(m).diagonal
        for k in range(1, min(rows, cols) + 1):
            minors = [
                _det([[m[r][c] for c in cset] for r in rset])
                for rset in itertools.combinations(range(rows), k)
                for cset in itertools.combinations(range(cols), k)
            ]
            dk = math.gcd(*minors) if len(minors) > 1 else abs(minors[0])
            prod = 1
            for v in diag[:k]:
                prod *= v
            assert prod == dk


def test_left_kernel():
    assert left_kernel([[2, 4], [6, 8]]) == []
    k = left_kernel([[1, 1], [1, 1]])
    assert len(k) == 1
    row = k[0]
    assert [row[0] + row[1], row[0] + row[1]] == [0, 0]
    assert left_kernel([[0, 0], [0, 0]]) != []


def test_solve_single_unknown():
    # 2x = 1/2 with canonical choice x = 1/4
    sol = solve_mod1([[2]], [Root.of(1, 2)])
    assert sol == [Root.of(1, 4)]


def test_solve_two_equations_one_unknown():
    # the pair g^2 = zeta_4, g^-2 = zeta_4^-1 has the common solution zeta_8
    sol = solve_mod1([[2], [-2]], [Root.of(1, 4), Root.of(3, 4)])
    assert sol is not None
    g = sol[0]
    assert g ** 2 == Root.of(1, 4)
    assert g ** -2 == Root.of(3, 4)


def test_solve_detects_inconsistency():
    assert solve_mod1([[2], [2]], [Root.of(1, 2), Root.one()]) is None
    # zero row forces the right-hand side to vanish there
    assert solve_mod1([[0]], [Root.of(1, 3)]) is None
    assert solve_mod1([[0]], [Root.one()]) == [Root.one()]


def test_solve_rectangular_and_substitute():
    rng = random.Random(17)
    for _ in range(60):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        x = [Root.of(rng.randrange(12), 12) for _ in range(cols)]
        rhs = []
        for i in range(rows):
            acc = Root.one()
            for j in range(cols):
                acc = acc * x[j] ** m[i][j]
            rhs.append(acc)
        sol = solve_mod1(m, rhs)
        # a solution must exist (x is one); the returned one must substitute back
        assert sol is not None
        for i in range(rows):
            acc = Root.one()
            for j in range(cols):
                acc = acc * sol[j] ** m[i][j]
            assert acc == rhs[i]


def test_solve_with_precomputed_decomposition():
    m = [[2, 0], [0, 3]]
    snf = smith_normal_form(m)
    sol = solve_with_snf(snf, [Root.of(1, 2), Root.of(2, 3)])
    assert sol is not None
    assert sol[0] ** 2 == Root.of(1, 2)
    assert sol[1] ** 3 == Root.of(2, 3)
    with pytest.raises(ValueError):
        solve_with_snf(snf, [Root.one()])


def test_matmul_shape_guard():
    with pytest.raises(AssertionError):
        matmul([[1, 2]], [[1, 2]])


def test_solvability_matches_left_kernel_criterion():
    # M x = v has a solution mod 1 exactly when v pairs to zero with
    # every integer row vector annihilating M from the left
    rng = random.Random(17)
    seen_solvable = seen_unsolvable = 0
    for _ in range(200):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        v = [Root(Fraction(rng.randrange(6), 6)) for _ in range(rows)]
        x = solve_mod1(m, v)
        orthogonal = all(
            sum(Fraction(u) * r.exponent for u, r in zip(krow, v)) % 1 == 0
            for krow in left_kernel(m)
        )
        assert (x is not None) == orthogonal
        if x is None:
            seen_unsolvable += 1
        else:
            seen_solvable += 1
            for mrow, r in zip(m, v):
                got = sum(Fraction(c) * s.exponent for c, s in zip(mrow, x))
                assert got % 1 == r.exponent
    assert seen_solvable > 20 and seen_unsolvable > 20
