"""Cohomology ring presentations of toric Fano manifolds.

H*(X; Z) = Z[x_1..x_m] / (Stanley-Reisner ideal + linear relations).  The
linear relations eliminate the d variables of the lexicographically first
facet; the surviving m-d generators are named x < y < z < u < v < w in
increasing vertex-index order.  The reduced ideal lives in the free
generators, with redundant Stanley-Reisner images pruned.
"""

from fractions import Fraction
from math import comb

from . import polyring as pr
from .lattice import mat_inverse_unimodular
from .polytope import dual_polytope, normalized_volume, direct_sum

GEN_NAMES = ["x", "y", "z", "u", "v", "w", "s", "t"]


class RingPresentation:
    """Graded quotient ring Z[gens]/(ideal_gens): the common core shared by
    cohomology presentations and their quotient refinements."""

    def __init__(self, n, ideal_gens, top_degree=None):
        self.n = n
        self.ideal_gens = list(ideal_gens)
        self.top_degree = top_degree
        self._gb = {}

    def gb(self, field_key="QQ"):
        """Groebner basis over Q (key 'QQ') or Z/p (key p)."""
        if field_key not in self._gb:
            if field_key == "QQ":
                gens, field = self.ideal_gens, pr.QQ
            else:
                p = int(field_key)
                gens = [pr.reduce_mod_p(g, p) for g in self.ideal_gens]
                gens = [g for g in gens if g.terms]
                field = pr.GF2 if p == 2 else (pr.GF3 if p == 3 else pr.PrimeField(p))
            self._gb[field_key] = pr.buchberger(gens, field)
        return self._gb[field_key]

    def normal_form(self, f, field_key="QQ"):
        return pr.normal_form(f, self.gb(field_key))

    def graded_dimensions(self, field_key="QQ", max_degree=None):
        """Dimensions of the graded pieces: counts of standard monomials."""
        leads = self.gb(field_key).lead_monomials()
        if max_degree is None:
            # the quotient is finite-dimensional for our rings; scan until
            # a degree with no standard monomials appears
            max_degree = self.top_degree
        dims = []
        k = 0
        while True:
            cnt = sum(1 for m in _monomials(self.n, k)
                      if not any(pr.mono_divides(l, m) for l in leads))
            if max_degree is None and cnt == 0:
                break
            dims.append(cnt)
            k += 1
            if max_degree is not None and k > max_degree:
                break
            if max_degree is None and k > 40:
                raise RuntimeError("quotient does not appear finite-dimensional")
        return tuple(dims)

    def standard_monomials(self, degree, field_key="QQ"):
        leads = self.gb(field_key).lead_monomials()
        return [m for m in _monomials(self.n, degree)
                if not any(pr.mono_divides(l, m) for l in leads)]

    def ideal_degree_sequence(self):
        return pr.minimal_degree_sequence(self.ideal_gens)


def _monomials(n, degree):
    if n == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree + 1):
        for rest in _monomials(n - 1, degree - first):
            yield (first,) + rest


class CohomologyPresentation(RingPresentation):
    def __init__(self, P, free, subst, ideal_gens):
        super().__init__(len(free), ideal_gens, top_degree=P.dim)
        self.polytope = P
        self.free = free          # 0-based vertex indices of free generators
        self.subst = subst        # vertex index -> integer coeff vector (free)
        self.names = GEN_NAMES[: len(free)]

    def subst_poly(self, i, field=pr.QQ):
        return pr.Poly.linear(self.n, self.subst[i], field)

    def __repr__(self):
        gens = ", ".join(pr.poly_str(g, self.names) for g in self.ideal_gens)
        return (f"Z[{', '.join(self.names)}]/({gens})")


def build_presentation(P):
    """Reduced presentation of H*(X(P)); eliminates the lexicographically
    first facet's variables."""
    d, m = P.dim, P.m
    sigma0 = min(P.facets)
    free = sorted(set(range(m)) - set(sigma0))
    nfree = len(free)
    # solve the d linear relations sum_j v_j[k] x_j = 0 for x_i, i in sigma0:
    # columns of A are the eliminated vertices; x_sigma = -A^{-1} * (free part)
    A = [[P.vertices[i][k] for i in sigma0] for k in range(d)]
    Ainv = mat_inverse_unimodular(A)
    subst = {}
    for pos, j in enumerate(free):
        subst[j] = tuple(1 if t == pos else 0 for t in range(nfree))
    elim_coeffs = {i: [0] * nfree for i in sigma0}
    for pos, j in enumerate(free):
        col = [P.vertices[j][k] for k in range(d)]
        sol = [-sum(Ainv[r][k] * col[k] for k in range(d)) for r in range(d)]
        for r, i in enumerate(sigma0):
            elim_coeffs[i][pos] = sol[r]
    for i in sigma0:
        subst[i] = tuple(elim_coeffs[i])
    # Stanley-Reisner generators, substituted, pruned to a minimal family
    images = [pr.Poly.linear(nfree, subst[i]) for i in range(m)]
    raw = []
    for nf in P.minimal_nonfaces():
        g = pr.Poly.const(nfree, 1)
        for i1 in nf:
            g = g * images[i1 - 1]
        raw.append(g)
    raw.sort(key=lambda g: g.total_degree())
    kept = []
    gbk = None
    for g in raw:
        if gbk is not None and pr.ideal_member(g, gbk):
            continue
        kept.append(g)
        gbk = pr.buchberger(kept)
    pres = CohomologyPresentation(P, free, subst, kept)
    pres._gb["QQ"] = gbk
    return pres


def chern_c1(pres):
    """First Chern class sum_i x_i expressed in the free generators."""
    total = [0] * pres.n
    for i in range(pres.polytope.m):
        for t, c in enumerate(pres.subst[i]):
            total[t] += c
    return pr.Poly.linear(pres.n, total)


def pontryagin_total(pres):
    """Normal form of prod_i (1 + x_i^2); each graded component has integer
    coefficients (checked)."""
    prod = pr.Poly.const(pres.n, 1)
    for i in range(pres.polytope.m):
        s = pres.subst_poly(i)
        prod = prod * (s * s + 1)
    nf = pres.normal_form(prod)
    for m, c in nf.terms.items():
        if isinstance(c, Fraction) and c.denominator != 1:
            raise ArithmeticError(
                f"non-integral Pontryagin coefficient {c} at {m}")
    return nf


def pontryagin_component(pres, k):
    return pontryagin_total(pres).graded_part(2 * k)


def degree_anticanonical(P):
    """(-K)^d = d! * vol(dual polytope)."""
    return normalized_volume(dual_polytope(P))


def degree_via_ring(pres):
    """(-K)^d computed inside the ring: NF(c1^d) and the class of a point
    NF(prod of a facet's generators) are proportional in the rank-1 top
    graded piece; the ratio is the degree."""
    P = pres.polytope
    d = P.dim
    sigma0 = set(min(P.facets))
    best = min(P.facets, key=lambda F: (len(sigma0 & set(F)), F))
    point = pr.Poly.const(pres.n, 1)
    for i in best:
        point = point * pres.subst_poly(i)
    nf_point = pres.normal_form(point)
    if nf_point.is_zero():
        raise ArithmeticError("facet monomial reduced to zero")
    nf_top = pres.normal_form(chern_c1(pres) ** d)
    if set(nf_point.terms) | set(nf_top.terms) != set(nf_point.terms):
        raise ArithmeticError("top graded piece not rank 1")
    mono = nf_point.lead_monomial()
    ratio = nf_top.terms.get(mono, Fraction(0)) / nf_point.terms[mono]
    # proportionality check
    scaled = nf_point * ratio
    if scaled != nf_top:
        raise ArithmeticError("top-degree normal forms not proportional")
    if ratio.denominator != 1 or ratio <= 0:
        raise ArithmeticError(f"degree ratio {ratio} is not a positive integer")
    return int(ratio)


def degree_of_product_check(P, Q):
    """deg(P + Q) = C(p+q, p) * deg(P) * deg(Q)."""
    p, q = P.dim, Q.dim
    lhs = degree_anticanonical(direct_sum(P, Q))
    rhs = comb(p + q, p) * degree_anticanonical(P) * degree_anticanonical(Q)
    return lhs == rhs
