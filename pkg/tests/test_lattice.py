"""Integer linear algebra: Smith normal form, unimodularity, basis tests."""

import random

from toricfano.lattice import (smith_normal_form, smith_diagonal, det,
                               identity, mat_mul, mat_vec, extends_to_basis,
                               is_primitive, mat_inverse_unimodular,
                               solve_integer_linear)

rng = random.Random(20240811)


def random_matrix(rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def random_unimodular(n, steps=12):
    U = identity(n)
    if n < 2:
        return U
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-3, 3)
        for k in range(n):
            U[i][k] += q * U[j][k]
        if rng.random() < 0.3:
            i, j = rng.sample(range(n), 2)
            U[i], U[j] = U[j], U[i]
    return U


def test_snf_identities_random():
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        M = random_matrix(rows, cols)
        D, U, V = smith_normal_form(M)
        assert mat_mul(mat_mul(U, M), V) == D
        assert det(U) in (1, -1)
        assert det(V) in (1, -1)
        diag = [D[i][i] for i in range(min(rows, cols))]
        # off-diagonal zero, nonnegative diagonal, divisibility chain
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert D[i][j] == 0
        assert all(x >= 0 for x in diag)
        for a, b in zip(diag, diag[1:]):
            assert b == 0 or (a != 0 and b % a == 0)


def test_snf_preserves_det_for_square():
    for _ in range(40):
        n = rng.randint(1, 4)
        M = random_matrix(n, n)
        D, U, V = smith_normal_form(M)
        prod = 1
        for i in range(n):
            prod *= D[i][i]
        assert prod == abs(det(M))


def test_unimodular_inverse_roundtrip():
    for _ in range(30):
        n = rng.randint(1, 5)
        U = random_unimodular(n)
        Uinv = mat_inverse_unimodular(U)
        assert mat_mul(U, Uinv) == identity(n)
        assert mat_mul(Uinv, U) == identity(n)


def test_extends_to_basis_on_unimodular_rows():
    for _ in range(30):
        n = rng.randint(2, 5)
        U = random_unimodular(n)
        k = rng.randint(1, n)
        assert extends_to_basis(U[:k])
        # a doubled row can never be part of a basis
        doubled = [[2 * c for c in U[0]]]
        assert not extends_to_basis(doubled)


def test_extends_to_basis_dependent_rows():
    assert not extends_to_basis([[1, 2], [2, 4]])
    assert extends_to_basis([[1, 2], [0, 1]])
    assert not extends_to_basis([[1, 2, 3], [1, 2, 3]])


def test_is_primitive():
    assert is_primitive([1, -2, 4])
    assert not is_primitive([2, -2, 4])
    assert not is_primitive([0, 0, 0])


def test_solve_linear_square_consistency():
    for _ in range(40):
        n = rng.randint(1, 4)
        while True:
            A = random_matrix(n, n)
            if det(A) != 0:
                break
        x = [rng.randint(-4, 4) for _ in range(n)]
        b = mat_vec(A, x)
        sol = solve_integer_linear(A, b)
        assert sol == x


def test_solve_linear_singular_returns_none():
    assert solve_integer_linear([[1, 2], [2, 4]], [1, 1]) is None


def test_smith_diagonal_example():
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]
