"""Exact integer linear algebra over the lattice Z^d.

Everything here works on plain Python ints (arbitrary precision) stored in
lists of lists, row-major.  Matrices are small (at most ~12 x 12), so the
classical elementary-operation algorithms are more than fast enough and keep
the results exact and reproducible.
"""

from fractions import Fraction
from math import gcd


def mat_copy(M):
    return [list(row) for row in M]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                Oi = out[i]
                for j in range(m):
                    Oi[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def det(M):
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = mat_copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M):
    """Return (S, L, R) with L*M*R = S, L and R unimodular, S diagonal with
    the divisibility chain d1 | d2 | ...

    Pivot selection: entry of minimal nonzero absolute value in the working
    submatrix, ties broken by (row, col) position, so the reduction (and the
    returned transforms) are deterministic.
    """
    S = mat_copy(M)
    r = len(S)
    c = len(S[0]) if r else 0
    L = identity(r)
    R = identity(c)

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        for j in range(c):
            S[dst][j] += q * S[src][j]
        for j in range(r):
            L[dst][j] += q * L[src][j]

    def add_col(src, dst, q):
        for row in S:
            row[dst] += q * row[src]
        for row in R:
            row[dst] += q * row[src]

    t = 0
    while t < min(r, c):
        # locate pivot: minimal |entry| != 0 in S[t:, t:]
        piv = None
        for i in range(t, r):
            for j in range(t, c):
                e = S[i][j]
                if e != 0 and (piv is None or abs(e) < abs(S[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # clear row and column t; pivot may need several rounds
        while True:
            dirty = False
            for i in range(t + 1, r):
                if S[i][t] != 0:
                    q = -(S[i][t] // S[t][t])
                    add_row(t, i, q)
                    if S[i][t] != 0:  # remainder became the smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, c):
                if S[t][j] != 0:
                    q = -(S[t][j] // S[t][t])
                    add_col(t, j, q)
                    if S[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # enforce divisibility: pivot must divide the rest of the submatrix
        bad = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if S[i][j] % S[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue  # redo the clearing with the fused row
        if S[t][t] < 0:
            for j in range(c):
                S[t][j] = -S[t][j]
            for j in range(r):
                L[t][j] = -L[t][j]
        t += 1
    return S, L, R


def smith_diagonal(M):
    S, _, _ = smith_normal_form(M)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def extends_to_basis(vectors):
    """True iff the given k <= d integer vectors extend to a Z-basis of Z^d,
    i.e. the k x d matrix has Smith form diag(1, ..., 1)."""
    if not vectors:
        return True
    d = len(vectors[0])
    k = len(vectors)
    if k > d:
        raise ValueError(f"{k} vectors cannot extend to a basis of Z^{d}")
    if any(len(v) != d for v in vectors):
        raise ValueError("mixed dimensions")
    diag = smith_diagonal([list(v) for v in vectors])
    return len(diag) == k and all(e == 1 for e in diag)


def is_primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def mat_inverse_unimodular(U):
    """Inverse of a matrix with det +-1, exact over Z."""
    n = len(U)
    dU = det(U)
    if dU not in (1, -1):
        raise ValueError("matrix is not unimodular")
    # adjugate via cofactors; n <= ~12 would be slow, but we only invert
    # d x d (d <= 6) matrices here.
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [U[r][s] for s in range(n) if s != i]
                for r in range(n) if r != j
            ]
            inv[i][j] = ((-1) ** (i + j)) * det(minor) * dU
    return inv


def solve_unimodular_from_basis(src, dst):
    """The unique integer matrix U with U*src_i = dst_i for all i, given that
    src is a Z-basis; None if U is not integral or not unimodular."""
    d = len(src)
    A = [list(col) for col in zip(*src)]  # columns are the src vectors
    if det(A) not in (1, -1):
        raise ValueError("src is not a Z-basis")
    Ainv = mat_inverse_unimodular(A)
    B = [list(col) for col in zip(*dst)]
    U = mat_mul(B, Ainv)
    if det(U) not in (1, -1):
        return None
    return U


def solve_integer_linear(A, b):
    """One exact rational solution x of A x = b, or None; A square invertible
    over Q.  Used for facet-equation solving (dual vertices)."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [e / pv for e in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [e - f * g for e, g in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]
