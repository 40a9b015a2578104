"""Bounded search for graded ring isomorphisms between cohomology
presentations, with first-Chern-class and Pontryagin-class preservation
checks.

A witness is an integer matrix L with |det| = 1 acting on the degree-2
generators: generator i of the source maps to the linear form with
coefficient row L[i] in the target's generators.  Mapping every ideal
generator to the ideal (normal form 0 over Q) suffices: L is invertible and
graded pieces have equal dimensions, so the induced map is an isomorphism.
"""

from dataclasses import dataclass
from itertools import product

from . import polyring as pr
from .lattice import det, mat_inverse_unimodular
from .cohomology import chern_c1, pontryagin_total, degree_anticanonical


@dataclass
class RingIsoWitness:
    L: list                    # row i = image of source generator i
    c1_preserving: bool = None
    pontryagin_preserving: bool = None

    def as_report(self):
        return {"L": [list(r) for r in self.L],
                "c1_preserving": self.c1_preserving,
                "pontryagin_preserving": self.pontryagin_preserving}


def apply_map(L, f, n, field=pr.QQ):
    images = [pr.Poly.linear(n, row, field) for row in L]
    return f.substitute(images)


def check_witness(w, presA, presB):
    """Independent validity check: |det L| = 1, every source ideal generator
    maps into the target ideal, and the inverse maps the target's generators
    back into the source ideal."""
    L = w.L
    if len(L) != presA.n or presA.n != presB.n:
        return False
    if det([list(r) for r in L]) not in (1, -1):
        return False
    for g in presA.ideal_gens:
        if pr.normal_form(apply_map(L, g, presB.n), presB.gb()).terms:
            return False
    Linv = mat_inverse_unimodular([list(r) for r in L])
    for g in presB.ideal_gens:
        if pr.normal_form(apply_map(Linv, g, presA.n), presA.gb()).terms:
            return False
    return True


class _QuotientTables:
    """Multiplication-by-linear-form tables of the target quotient ring,
    reduced modulo a large prime.  Lets the bounded search evaluate normal
    forms of mapped generators with small integer matrix arithmetic; a
    mapped generator with nonzero mod-p normal form cannot lie in the ideal,
    so pruning on it never discards a genuine isomorphism."""

    def __init__(self, pres, p=1_000_003):
        self.p = p
        self.n = n = pres.n
        top = pres.top_degree or max(
            g.total_degree() for g in pres.ideal_gens)
        self.top = top
        gb = pres.gb()
        self.basis = []       # degree k -> list of standard monomials
        self.index = []       # degree k -> monomial -> position
        for k in range(top + 2):
            mons = pres.standard_monomials(k)
            self.basis.append(mons)
            self.index.append({m: i for i, m in enumerate(mons)})
        # M[k][j]: matrix of multiplication by x_j from degree k to k+1
        self.M = []
        for k in range(top + 1):
            layer = []
            for j in range(n):
                rows = []
                xj = pr.Poly.gen(n, j)
                for m in self.basis[k]:
                    f = pr.normal_form(pr.Poly(n, {m: pr.QQ.one}) * xj, gb)
                    vec = [0] * len(self.basis[k + 1])
                    for mm, c in f.terms.items():
                        vec[self.index[k + 1][mm]] = self._modp(c)
                    rows.append(vec)
                layer.append(rows)   # shape: dim_k x dim_{k+1}
            self.M.append(layer)

    def _modp(self, c):
        num, den = c.numerator, c.denominator
        return num * pow(den, -1, self.p) % self.p

    def row_operator(self, row, k):
        """Matrix (dim_k x dim_{k+1}) of multiplication by sum row[j] x_j."""
        p = self.p
        dk, dk1 = len(self.basis[k]), len(self.basis[k + 1])
        out = [[0] * dk1 for _ in range(dk)]
        for j, c in enumerate(row):
            if not c:
                continue
            Mj = self.M[k][j]
            for a in range(dk):
                ra, oa = Mj[a], out[a]
                for b in range(dk1):
                    if ra[b]:
                        oa[b] = (oa[b] + c * ra[b]) % p
        return out

    def image_is_zero(self, g, ops):
        """ops[i] = per-degree operator list for the image of generator i.
        Evaluates NF(image of g) mod p and tests for zero."""
        p = self.p
        deg = g.total_degree()
        acc = [0] * len(self.basis[deg])
        for mono, coeff in g.terms.items():
            vec = [1]           # representation of 1 in degree 0
            k = 0
            for i, e in enumerate(mono):
                for _ in range(e):
                    op = ops[i][k]
                    nxt = [0] * len(self.basis[k + 1])
                    for a, va in enumerate(vec):
                        if va:
                            ra = op[a]
                            for b in range(len(nxt)):
                                if ra[b]:
                                    nxt[b] = (nxt[b] + va * ra[b]) % p
                    vec = nxt
                    k += 1
            c = self._modp(coeff)
            for b, vb in enumerate(vec):
                if vb:
                    acc[b] = (acc[b] + c * vb) % p
        return all(v == 0 for v in acc)


def find_ring_isos_bounded(presA, presB, B=2):
    """All integer matrices L, entries in [-B, B], |det| = 1, mapping the
    source ideal into the target ideal.  Exhaustive within the bound.

    Rows (generator images) are chosen one at a time; a partial choice is
    pruned when it drops rank or when some ideal generator supported on the
    already-assigned generators has nonzero normal form in the target
    (evaluated mod a large prime via precomputed multiplication tables --
    a sound filter).  Every surviving matrix is re-verified exactly.
    """
    if presA.n != presB.n:
        raise ValueError("generator counts differ")
    n = presA.n
    tables = _QuotientTables(presB)
    p = tables.p
    # generators of A grouped by the largest variable they involve
    by_maxvar = [[] for _ in range(n)]
    for g in presA.ideal_gens:
        mv = max(i for m in g.terms for i, e in enumerate(m) if e)
        by_maxvar[mv].append(g)
    maxdeg = max(g.total_degree() for g in presA.ideal_gens)
    rows = [r for r in product(range(-B, B + 1), repeat=n)
            if any(r)]
    # per-candidate-row multiplication operators, computed once
    row_ops = {r: [tables.row_operator(r, k) for k in range(maxdeg)]
               for r in rows}

    def rank_rows(partial):
        mat = [[c % p for c in r] for r in partial]
        rank = 0
        for col in range(n):
            piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            inv = pow(mat[rank][col], -1, p)
            mat[rank] = [(x * inv) % p for x in mat[rank]]
            for i in range(len(mat)):
                if i != rank and mat[i][col]:
                    f = mat[i][col]
                    mat[i] = [(x - f * y) % p
                              for x, y in zip(mat[i], mat[rank])]
            rank += 1
        return rank

    out = []

    def dfs(t, partial, ops):
        if t == n:
            if det([list(r) for r in partial]) in (1, -1):
                out.append(RingIsoWitness(L=[list(r) for r in partial]))
            return
        for row in rows:
            cand = partial + [row]
            if rank_rows(cand) != t + 1:
                continue
            cand_ops = ops + [row_ops[row]]
            if any(not tables.image_is_zero(g, cand_ops)
                   for g in by_maxvar[t]):
                continue
            dfs(t + 1, cand, cand_ops)

    dfs(0, [], [])
    witnesses = [w for w in out if check_witness(w, presA, presB)]
    return witnesses


def check_c1_preserving(w, presA, presB, allow_sign=False):
    """L(c1(A)) = c1(B) exactly (degree-1 forms; the ideal has no linear
    part).  allow_sign=True additionally accepts L(c1) = -c1'."""
    cA = chern_c1(presA)
    cB = chern_c1(presB)
    img = apply_map(w.L, cA, presB.n)
    if img == cB:
        return True
    if allow_sign and img == -cB:
        return True
    return False


def check_pontryagin_preserving(w, presA, presB):
    """NF(L(p_k(A))) = NF(p_k(B)) for every graded component k <= d/2."""
    if not check_witness(w, presA, presB):
        raise ValueError("invalid ring isomorphism witness")
    d = presA.top_degree or max(g.total_degree() for g in presA.ideal_gens)
    pA = pontryagin_total(presA)
    pB = pontryagin_total(presB)
    for k in range(1, d // 2 + 1):
        lhs = pr.normal_form(apply_map(w.L, pA.graded_part(2 * k), presB.n),
                             presB.gb())
        rhs = pr.normal_form(pB.graded_part(2 * k), presB.gb())
        if lhs != rhs:
            return False
    return True


def degree_gate(P1, P2):
    """Anticanonical degrees agree -- a necessary condition for a
    c1-preserving ring isomorphism."""
    return degree_anticanonical(P1) == degree_anticanonical(P2)


def annotate(w, presA, presB):
    w.c1_preserving = check_c1_preserving(w, presA, presB)
    w.pontryagin_preserving = check_pontryagin_preserving(w, presA, presB)
    return w
