"""Ring invariants: k-th-power-vanishing elements, maximal basis numbers,
fingerprints and quotient refinements.

Terminology: an s.v.e. / c.v.e. / k-v.e. of H is a primitive degree-2 class
whose square / cube / k-th power vanishes.  Over Z/p "primitive" means
nonzero, and classes are counted up to nonzero scalar; over Z solutions are
primitive integer vectors counted up to sign.

The integral searches are bounded (coefficients in [-B, B], default B = 5)
with a stability scan at 2B; when strictly more solutions appear at 2B the
report is flagged HeuristicInfinite.  Infinitude is never claimed as a
theorem.  For Picard number >= 7 the classify driver lowers B to 2 to keep
the stability grid tractable; all table-scale fixtures have Picard <= 6.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import numpy as np

from . import polyring as pr
from .cohomology import RingPresentation
from .lattice import extends_to_basis

EXHAUSTIVE = "Exhaustive"
BOUNDED = "BoundedSearch"
HEURISTIC_INFINITE = "HeuristicInfinite"


@dataclass
class KveReport:
    k: int
    ring: object            # "Z" or a prime p
    solutions: list         # canonical coefficient tuples
    completeness: str
    bound: int = None
    span_dim: int = 0
    is_subspace: bool = False
    span_basis: list = field(default_factory=list)

    def count(self):
        return len(self.solutions)


# ---------------------------------------------------------------------------
# condition polynomials


def kve_condition_polynomials(ring, k, field_key="QQ"):
    """Coefficients (as polynomials in parameters a_1..a_n) of the standard
    monomials in NF((a_1 x_1 + ... + a_n x_n)^k); over Q they are returned in
    primitive integer form as lists of (exponent tuple, int) pairs, over Z/p
    as ParamPoly values."""
    cache = getattr(ring, "_kve_conditions", None)
    if cache is None:
        cache = ring._kve_conditions = {}
    key = (k, field_key)
    if key in cache:
        return cache[key]
    n = ring.n
    if field_key == "QQ":
        base = pr.QQ
    else:
        base = pr.GF2 if int(field_key) == 2 else pr.GF3
    params = [pr.ParamPoly.param(n, i, base) for i in range(n)]
    f = pr.Poly(n, {tuple(1 if j == i else 0 for j in range(n)): params[i]
                    for i in range(n)}, base)
    nf = pr.normal_form(f ** k, ring.gb(field_key))
    conds = []
    for mono in sorted(nf.terms, key=pr.grlex_key):
        c = nf.terms[mono]
        if field_key == "QQ":
            conds.append(c.integer_primitive())
        else:
            conds.append(c)
    cache[key] = conds
    return conds


# ---------------------------------------------------------------------------
# exhaustive mod-p search


def _projective_reps(n, p):
    """All nonzero vectors of (Z/p)^n with first nonzero coordinate 1."""
    for v in product(range(p), repeat=n):
        nz = next((c for c in v if c), None)
        if nz == 1:
            yield v


def _gf_span(vectors, n, p):
    """Row-reduce over Z/p: returns (dim, echelon basis as tuples)."""
    rows = [list(v) for v in vectors]
    basis = []
    pivots = []
    for row in rows:
        row = row[:]
        for b, pc in zip(basis, pivots):
            if row[pc] % p:
                f = row[pc] % p
                row = [(r - f * bb) % p for r, bb in zip(row, b)]
        nz = next((i for i, c in enumerate(row) if c % p), None)
        if nz is None:
            continue
        inv = pow(row[nz], -1, p)
        row = [(c * inv) % p for c in row]
        basis.append(row)
        pivots.append(nz)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return len(basis), [tuple(basis[i]) for i in order]


def kve_mod_p(ring, k, p):
    """Exact k-v.e. solution set over Z/p, up to scalar, with the
    span/subspace reading used by the parenthesized table cells."""
    n = ring.n
    conds = kve_condition_polynomials(ring, k, p)
    sols = []
    for v in _projective_reps(n, p):
        if all(not c.specialize([pr.ModInt(x, p) for x in v]) for c in conds):
            sols.append(v)
    dim, basis = _gf_span(sols, n, p)
    # the solution set (with 0) is a linear subspace iff it exhausts its span
    expected = (p ** dim - 1) // (p - 1)
    return KveReport(k=k, ring=p, solutions=sorted(sols),
                     completeness=EXHAUSTIVE, span_dim=dim,
                     is_subspace=(len(sols) == expected), span_basis=basis)


# ---------------------------------------------------------------------------
# bounded integral search


def _canonical_sign(v):
    nz = next((c for c in v if c), 0)
    return tuple(-x for x in v) if nz < 0 else tuple(v)


def _gcd_vec(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def _integer_solutions(conds, n, B):
    """All primitive integer vectors with entries in [-B, B] killing every
    condition polynomial, canonicalized up to sign.  numpy-vectorized over
    the trailing coordinates with sequential condition masking."""
    if not conds:
        # every vector works; return the primitive ones (can be huge -- the
        # caller only hits this for tiny n)
        out = set()
        for v in product(range(-B, B + 1), repeat=n):
            if _gcd_vec(v) == 1:
                out.add(_canonical_sign(v))
        return sorted(out)
    width = 2 * B + 1
    tail = 0
    size = 1
    while tail < n and size * width <= 2_000_000:
        size *= width
        tail += 1
    head = n - tail
    coords = np.arange(-B, B + 1, dtype=np.int64)
    grids = np.meshgrid(*([coords] * tail), indexing="ij")
    flat = [g.reshape(-1) for g in grids]
    maxexp = max((e for cond in conds for exps, _ in cond for e in exps),
                 default=1)
    powtab = [[np.ones_like(flat[i]) for _ in range(maxexp + 1)]
              for i in range(tail)]
    for i in range(tail):
        for e in range(1, maxexp + 1):
            powtab[i][e] = powtab[i][e - 1] * flat[i]
    conds = sorted(conds, key=len)
    out = set()
    for headvals in product(range(-B, B + 1), repeat=head):
        alive = None
        for cond in conds:
            vals = None
            for exps, coeff in cond:
                scal = coeff
                for i in range(head):
                    scal *= headvals[i] ** exps[i]
                if scal == 0:
                    continue
                term = None
                for i in range(tail):
                    e = exps[head + i]
                    if e:
                        t = powtab[i][e] if alive is None else powtab[i][e][alive]
                        term = t if term is None else term * t
                if term is None:
                    contrib = scal
                    vals = contrib if vals is None else vals + contrib
                else:
                    vals = scal * term if vals is None else vals + scal * term
            if vals is None:
                continue  # condition vanishes identically on this slice
            if np.isscalar(vals) or getattr(vals, "ndim", 1) == 0:
                if vals != 0:
                    alive = np.empty(0, dtype=np.int64)
                    break
                continue
            good = vals == 0
            if alive is None:
                alive = np.nonzero(good)[0]
            else:
                alive = alive[good]
            if alive.size == 0:
                break
        if alive is None:
            alive = np.arange(flat[0].size if tail else 1)
        if tail == 0:
            candidates = [headvals] if alive.size else []
        else:
            candidates = [headvals + tuple(int(flat[i][j]) for i in range(tail))
                          for j in alive]
        for v in candidates:
            if _gcd_vec(v) == 1:
                out.add(_canonical_sign(v))
    return sorted(out)


def kve_integer_bounded(ring, k, B=5, stability=True):
    """Bounded search for integral k-v.e. (torsion-freeness makes vanishing
    over Z equivalent to vanishing over Q, so the rational condition
    polynomials are faithful)."""
    conds = kve_condition_polynomials(ring, k, "QQ")
    sols = _integer_solutions(conds, ring.n, B)
    completeness = BOUNDED
    if stability:
        bigger = _integer_solutions(conds, ring.n, 2 * B)
        if len(bigger) > len(sols):
            completeness = HEURISTIC_INFINITE
    dim, _ = _gf_span([[x % 2 for x in v] for v in sols], ring.n, 2)
    return KveReport(k=k, ring="Z", solutions=sols, completeness=completeness,
                     bound=B, span_dim=dim)


def sve_integer_bounded(ring, k=2, B=5):
    return kve_integer_bounded(ring, k, B)


# ---------------------------------------------------------------------------
# maximal basis number


def maximal_basis_number(ring, sve_report=None, mod2_report=None, B=5):
    """(lower, upper) bounds for the maximal basis number: lower = largest
    subset of the found integral s.v.e. extending to a Z-basis; upper = the
    smaller of the GF(2)-span and GF(3)-span dimensions of the exact mod-p
    s.v.e. sets (a primitive integral s.v.e. reduces to a nonzero mod-p one,
    and a partial Z-basis stays independent mod p)."""
    if sve_report is None:
        sve_report = kve_integer_bounded(ring, 2, B)
    if mod2_report is None:
        mod2_report = kve_mod_p(ring, 2, 2)
    upper = min(mod2_report.span_dim, kve_mod_p(ring, 2, 3).span_dim)
    sols = list(sve_report.solutions)
    best = 0

    def dfs(start, chosen):
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        if best >= upper:
            return
        for i in range(start, len(sols)):
            if len(chosen) + (len(sols) - i) <= best:
                break
            cand = chosen + [sols[i]]
            if extends_to_basis(cand):
                dfs(i + 1, cand)

    dfs(0, [])
    return (best, upper)


# ---------------------------------------------------------------------------
# quotient refinement


def quotient_refine(ring, elements, powers=None):
    """New presentation with element_i^power_i adjoined to the ideal.
    Elements are integer coefficient vectors (or Poly values) in the free
    generators."""
    if powers is None:
        powers = [1] * len(elements)
    gens = list(ring.ideal_gens)
    for el, pw in zip(elements, powers):
        f = el if isinstance(el, pr.Poly) else pr.Poly.linear(ring.n, el)
        gens.append(f ** pw)
    return RingPresentation(ring.n, gens, top_degree=ring.top_degree)


# ---------------------------------------------------------------------------
# fingerprints


KVE_KEYS = ((2, "Z"), (2, 2), (3, "Z"), (3, 2), (3, 3), (4, 2))


def _mini_fingerprint(ring):
    """Torsion-safe invariant tuple of a (possibly refined) ring: graded
    dimensions over Q, Z/2, Z/3, the minimal degree sequence of the ideal
    over Q, and mod-p k-v.e. counts/span data for small k."""
    dims = tuple(ring.graded_dimensions(k, max_degree=ring.top_degree)
                 for k in ("QQ", 2, 3))
    try:
        degseq = ring.ideal_degree_sequence()
    except ValueError:
        degseq = ("n/a",)
    kve = []
    for k, p in ((2, 2), (2, 3), (3, 2), (3, 3)):
        rep = kve_mod_p(ring, k, p)
        kve.append((k, p, rep.count(), rep.span_dim, rep.is_subspace))
    return (dims, degseq, tuple(kve))


def fingerprint(pres, B=5):
    """Canonical invariant fingerprint of a cohomology presentation.

    Layer 0: f-vector, ideal degree sequence, k-v.e. counts/span data for
    (k, ring) in KVE_KEYS, and mbn bounds.  Refinement layers quotient by the
    canonically-determined s.v.e./c.v.e. sets (single elements and their
    squares, the whole sets, pairs) and by the exact mod-2 s.v.e. set; these
    encode the quotient-ring arguments that separate rings the plain counts
    cannot.  Everything is count/dimension/degree-multiset based -- never a
    coefficient literal -- so the fingerprint is generator-naming invariant.
    """
    P = getattr(pres, "polytope", None)
    fvec = P.f_vector() if P is not None else ("-",)
    degseq = pres.ideal_degree_sequence()
    reports = {}
    for k, rg in KVE_KEYS:
        if rg == "Z":
            reports[(k, rg)] = kve_integer_bounded(pres, k, B)
        else:
            reports[(k, rg)] = kve_mod_p(pres, k, rg)
    kve_summary = []
    for key in KVE_KEYS:
        rep = reports[key]
        if rep.ring == "Z":
            if rep.completeness == HEURISTIC_INFINITE:
                kve_summary.append((key, ("inf", rep.span_dim)))
            else:
                kve_summary.append((key, ("fin", rep.count(), rep.span_dim)))
        else:
            kve_summary.append(
                (key, (rep.count(), rep.span_dim, rep.is_subspace)))
    mbn = maximal_basis_number(pres, reports[(2, "Z")], reports[(2, 2)])

    refinements = []
    for k in (2, 3):
        rep = reports[(k, "Z")]
        if rep.completeness != BOUNDED:
            refinements.append(((k, "single"), "skipped"))
            refinements.append(((k, "square"), "skipped"))
            refinements.append(((k, "all"), "skipped"))
            continue
        sols = rep.solutions
        singles = sorted(_mini_fingerprint(quotient_refine(pres, [s]))
                         for s in sols)
        squares = sorted(_mini_fingerprint(quotient_refine(pres, [s], [2]))
                         for s in sols)
        refinements.append(((k, "single"), tuple(singles)))
        refinements.append(((k, "square"), tuple(squares)))
        whole = (_mini_fingerprint(quotient_refine(pres, sols))
                 if sols else "empty")
        refinements.append(((k, "all"), whole))
        if k == 2 and 2 <= len(sols) <= 8:
            prs = sorted(_mini_fingerprint(quotient_refine(pres, [s, t]))
                         for s, t in combinations(sols, 2))
            refinements.append(((k, "pairs"), tuple(prs)))

    refinements.append(("mod2-quotient", _mod2_quotient_profile(pres)))

    return (
        ("f_vector", tuple(fvec)),
        ("ideal_degrees", tuple(degseq)),
        ("kve", tuple(kve_summary)),
        ("mbn", mbn),
        ("refine", tuple(refinements)),
    )


def _mod2_quotient_profile(pres):
    """Invariants of (H tensor Z/2) / (exact mod-2 s.v.e. set): graded
    dimensions and minimal degree sequence over GF(2)."""
    rep = kve_mod_p(pres, 2, 2)
    gens = [pr.reduce_mod_p(g, 2) for g in pres.ideal_gens]
    gens = [g for g in gens if g.terms]
    # the ideal generated by a set of linear forms equals the ideal of a
    # basis of their span, so the echelon basis suffices
    for v in rep.span_basis:
        gens.append(pr.Poly.linear(pres.n, v, pr.GF2))
    ring = RingPresentation(pres.n, [], top_degree=pres.top_degree)
    ring._gb[2] = pr.buchberger(gens, pr.GF2)
    dims = ring.graded_dimensions(2, max_degree=pres.top_degree)
    degseq = pr.minimal_degree_sequence(gens, pr.GF2)
    return (dims, tuple(degseq))


def fingerprints_equal(fp1, fp2):
    return fp1 == fp2
