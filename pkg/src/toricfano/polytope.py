"""Smooth Fano polytopes: parsing, validation, face combinatorics, duals,
normalized volumes and direct sums.

A smooth Fano d-polytope is given by its ordered vertex list (primitive
lattice points, origin strictly interior, every facet's vertex set a
Z-basis).  Vertex indices are 1-based everywhere user-visible, matching the
convention used for minimal nonfaces like "14, 25, 36".
"""

from fractions import Fraction
from itertools import combinations

from .lattice import det, solve_integer_linear


class ParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(ValueError):
    pass


class SmoothFanoPolytope:
    """Vertex list plus eagerly computed face combinatorics.

    facets: sorted list of sorted d-tuples of 0-based vertex indices.
    faces: frozenset of all frozensets that span faces (subsets of facets).
    """

    def __init__(self, vertices, id=None, validate=True):
        self.id = id
        self.vertices = [tuple(int(x) for x in v) for v in vertices]
        if not self.vertices:
            raise ValidationError("empty vertex list")
        self.dim = len(self.vertices[0])
        if any(len(v) != self.dim for v in self.vertices):
            raise ValidationError("mixed vertex dimensions")
        self.m = len(self.vertices)
        self._compute_facets()
        if validate:
            report = validate_smooth_fano(self)
            if not report["ok"]:
                fails = [k for k, (ok, _) in report["checks"].items() if not ok]
                raise ValidationError(
                    f"polytope id={id}: not smooth Fano, failed {fails}")

    # -- combinatorics ------------------------------------------------------

    def _compute_facets(self):
        d, m, V = self.dim, self.m, self.vertices
        facets = []
        normals = []
        self._nonsimplicial = False
        for S in combinations(range(m), d):
            A = [V[i] for i in S]
            if det(A) == 0:
                continue
            u = solve_integer_linear([list(v) for v in A], [1] * d)
            ok = True
            touching = False
            for j in range(m):
                if j in S:
                    continue
                h = sum(ui * x for ui, x in zip(u, V[j]))
                if h > 1:
                    ok = False
                    break
                if h == 1:
                    touching = True
            if ok:
                if touching:
                    # another vertex on the affine hull: face is not a simplex
                    self._nonsimplicial = True
                else:
                    facets.append(tuple(S))
                    normals.append(tuple(u))
        self.facets = facets
        self.facet_normals = normals  # outer: <u, v> = 1 on the facet
        faces = set()
        for F in facets:
            fs = list(F)
            for k in range(len(fs) + 1):
                for sub in combinations(fs, k):
                    faces.add(frozenset(sub))
        self.faces = faces

    def f_vector(self):
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)  # counts[k] = number of (k-1)-faces, counts[0]=1

    def minimal_nonfaces(self):
        """Minimal non-faces as sorted tuples of 1-based indices."""
        out = []
        for k in range(1, self.dim + 2):
            for S in combinations(range(self.m), k):
                fs = frozenset(S)
                if fs in self.faces:
                    continue
                if all(fs - {i} in self.faces for i in S):
                    out.append(tuple(i + 1 for i in S))
        return sorted(out, key=lambda t: (len(t), t))

    def facet_count(self):
        return len(self.facets)

    def __repr__(self):
        return f"SmoothFanoPolytope(id={self.id}, d={self.dim}, m={self.m})"


class RationalPolytope:
    """Plain vertex list with rational coordinates; duals of smooth Fano
    polytopes carry a reference to the source polytope, which provides the
    face structure needed for exact triangulation."""

    def __init__(self, dim, vertices, source=None):
        self.dim = dim
        self.vertices = [tuple(Fraction(x) for x in v) for v in vertices]
        self.source = source


# ---------------------------------------------------------------------------
# parsing


def parse_polytopes(text, validate=True):
    """Parse the canonical text format.

    Record: header line `id <int> dim <int> vertices <int>`, then m lines of
    d integers; records separated by blank lines; `#` starts a comment line.
    """
    polys = []
    lines = text.splitlines()
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i].strip()
        if not line or line.startswith("#"):
            i += 1
            continue
        parts = line.split()
        if (len(parts) != 6 or parts[0] != "id" or parts[2] != "dim"
                or parts[4] != "vertices"):
            raise ParseError(f"bad record header {line!r}", i + 1)
        try:
            pid, d, m = int(parts[1]), int(parts[3]), int(parts[5])
        except ValueError:
            raise ParseError(f"non-integer field in header {line!r}", i + 1)
        verts = []
        i += 1
        while len(verts) < m:
            if i >= n:
                raise ParseError(
                    f"record id {pid}: expected {m} vertex lines, got {len(verts)}", n)
            row = lines[i].strip()
            if row.startswith("#"):
                i += 1
                continue
            if not row:
                raise ParseError(
                    f"record id {pid}: blank line inside vertex block", i + 1)
            try:
                v = [int(x) for x in row.split()]
            except ValueError:
                raise ParseError(f"non-integer coordinate in {row!r}", i + 1)
            if len(v) != d:
                raise ParseError(
                    f"expected {d} coordinates, got {len(v)}", i + 1)
            verts.append(v)
            i += 1
        try:
            polys.append(SmoothFanoPolytope(verts, id=pid, validate=validate))
        except ValidationError as e:
            raise ValidationError(f"record ending at line {i}: {e}")
    return polys


def load_fixture_file(path, validate=True):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polytopes(fh.read(), validate=validate)


# ---------------------------------------------------------------------------
# validation


def validate_smooth_fano(P):
    """Report-style validation: pass/fail per invariant."""
    checks = {}
    d, m, V = P.dim, P.m, P.vertices

    from math import gcd
    prim = all(_gcd_list(v) == 1 for v in V)
    checks["primitive_vertices"] = (prim, "every vertex is a primitive lattice point")
    checks["distinct_vertices"] = (len(set(V)) == m, "no repeated vertices")

    rank_ok = any(det([list(V[i]) for i in S]) != 0
                  for S in combinations(range(m), d)) if m >= d else False
    checks["full_dimensional"] = (rank_ok, "vertices span R^d")

    checks["simplicial"] = (not P._nonsimplicial,
                            "every supporting hyperplane face is a simplex")

    covered = set()
    for F in P.facets:
        covered.update(F)
    ridge_count = {}
    for F in P.facets:
        for R in combinations(F, d - 1):
            ridge_count[R] = ridge_count.get(R, 0) + 1
    closed = (bool(P.facets) and covered == set(range(m))
              and all(c == 2 for c in ridge_count.values()))
    checks["interior_origin"] = (
        closed, "facet fan is complete (origin strictly interior)")

    uni = all(abs(det([list(V[i]) for i in F])) == 1 for F in P.facets)
    checks["facet_determinants"] = (uni, "every facet vertex set is a Z-basis")

    ok = all(v for v, _ in checks.values())
    return {"ok": ok, "checks": checks, "id": P.id, "dim": d, "vertices": m,
            "facets": len(P.facets)}


def _gcd_list(v):
    from math import gcd
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


# ---------------------------------------------------------------------------
# duals, volumes, sums


def dual_polytope(P):
    """The dual {u : <u, v_i> >= -1}; one vertex per facet of P (solving
    <u, v_i> = -1 on the facet).  Integral because P is reflexive."""
    verts = []
    for F in P.facets:
        A = [list(P.vertices[i]) for i in F]
        u = solve_integer_linear(A, [-1] * P.dim)
        if any(x.denominator != 1 for x in u):
            raise ValidationError("polytope is not reflexive")
        verts.append(tuple(int(x) for x in u))
    return RationalPolytope(P.dim, verts, source=P)


def normalized_volume(Q):
    """d! times the Euclidean volume of Q, exactly.

    For duals of smooth Fano polytopes the triangulation is driven by the
    source polytope's face poset (a pulling triangulation of the simple dual);
    standalone rational polytopes are supported in dimensions <= 2.
    """
    if Q.source is not None:
        return _dual_volume(Q)
    d = Q.dim
    if d == 1:
        xs = [v[0] for v in Q.vertices]
        val = max(xs) - min(xs)
    elif d == 2:
        # fan triangulation after sorting vertices by angle around the origin
        import math
        pts = sorted(Q.vertices,
                     key=lambda v: math.atan2(float(v[1]), float(v[0])))
        val = Fraction(0)
        for i in range(len(pts)):
            a, b = pts[i], pts[(i + 1) % len(pts)]
            val += a[0] * b[1] - a[1] * b[0]
    else:
        raise ValueError("standalone volume only implemented for d <= 2; "
                         "duals of smooth Fano polytopes carry combinatorics")
    if isinstance(val, Fraction):
        if val.denominator != 1:
            raise ValueError("non-integral normalized volume")
        val = val.numerator
    return abs(val)


def _dual_volume(Q):
    P = Q.source
    d = P.dim
    # facet index sets containing each face of P
    facets = [frozenset(F) for F in P.facets]
    from functools import lru_cache

    facets_of = {}
    for idx, F in enumerate(facets):
        for k in range(1, d + 1):
            for sub in combinations(sorted(F), k):
                facets_of.setdefault(frozenset(sub), []).append(idx)

    def simplices(face):
        """Pulling triangulation of the dual face G_face = {u_F : F >= face};
        returns tuples of facet indices (each a vertex of the dual)."""
        incident = facets_of[face]
        if len(face) == d:
            return [(incident[0],)]
        base = min(incident)
        out = []
        sub_done = set()
        for fidx in incident:
            for w in facets[fidx] - face:
                g = face | {w}
                if g in sub_done:
                    continue
                sub_done.add(g)
                if w in facets[base]:
                    continue  # subface contains the base vertex
                for T in simplices(g):
                    out.append((base,) + T)
        return out

    # top level: cone the whole dual from the first facet's dual vertex
    base = 0
    tri = []
    done = set()
    for v in range(P.m):
        g = frozenset({v})
        if g in done or v in facets[base]:
            continue
        done.add(g)
        for T in simplices(g):
            tri.append((base,) + T)
    total = 0
    U = Q.vertices
    for T in tri:
        p0 = U[T[0]]
        M = [[U[t][j] - p0[j] for j in range(d)] for t in T[1:]]
        M = [[int(x) for x in row] for row in M]
        total += abs(det(M))
    return total


def direct_sum(P, Q):
    """Free sum conv(P x 0, 0 x Q): coordinate blocks concatenated, vertex
    order = P's vertices then Q's."""
    dp, dq = P.dim, Q.dim
    verts = [list(v) + [0] * dq for v in P.vertices]
    verts += [[0] * dp + list(v) for v in Q.vertices]
    return SmoothFanoPolytope(verts, id=None)
