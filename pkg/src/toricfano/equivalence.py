"""Unimodular equivalence and the sign-equivalence (diffeomorphism)
criterion, plus the classification driver.

Sign-equivalence: a simplicial-complex isomorphism pi between the face
complexes together with a unimodular U and signs eps_i = +-1 such that
U v_i = eps_i v'_{pi(i)} for every vertex.  With all eps = +1 this is
unimodular equivalence (variety isomorphism).
"""

from dataclasses import dataclass

from .lattice import mat_vec, solve_unimodular_from_basis
from .invariants import fingerprint


@dataclass
class EquivalenceWitness:
    pi: tuple      # pi[i] = image of vertex i (0-based)
    U: list        # d x d unimodular matrix
    eps: tuple     # signs, +-1 per vertex of P1

    def as_report(self):
        return {"pi": [p + 1 for p in self.pi],
                "U": [list(r) for r in self.U],
                "eps": list(self.eps)}


def verify_witness(P1, P2, w):
    """Independent witness check: pi a complex isomorphism and
    U v_i = eps_i v'_{pi(i)} for all i, |eps_i| = 1."""
    if sorted(w.pi) != list(range(P1.m)):
        return False
    facets2 = {frozenset(F) for F in P2.facets}
    if {frozenset(w.pi[i] for i in F) for F in P1.facets} != facets2:
        return False
    if any(e not in (1, -1) for e in w.eps):
        return False
    for i, v in enumerate(P1.vertices):
        img = mat_vec(w.U, list(v))
        target = [w.eps[i] * c for c in P2.vertices[w.pi[i]]]
        if img != target:
            return False
    return True


def complex_isomorphisms(P1, P2):
    """All bijections of vertices carrying facets to facets; backtracking
    with vertex-degree and pairwise facet-incidence pruning.  Yields maps
    with lexicographically smallest images first."""
    if P1.m != P2.m or len(P1.facets) != len(P2.facets):
        return
    if P1.f_vector() != P2.f_vector():
        return
    m = P1.m

    def codegrees(P):
        co = [[0] * P.m for _ in range(P.m)]
        for F in P.facets:
            for a in F:
                for b in F:
                    co[a][b] += 1
        return co

    co1, co2 = codegrees(P1), codegrees(P2)
    facets2 = {frozenset(F) for F in P2.facets}
    assign = [-1] * m
    used = [False] * m

    def backtrack(i):
        if i == m:
            if {frozenset(assign[t] for t in F) for F in P1.facets} == facets2:
                yield tuple(assign)
            return
        for img in range(m):
            if used[img] or co1[i][i] != co2[img][img]:
                continue
            ok = all(co1[i][j] == co2[img][assign[j]] for j in range(i))
            if not ok:
                continue
            assign[i] = img
            used[img] = True
            yield from backtrack(i + 1)
            assign[i] = -1
            used[img] = False

    yield from backtrack(0)


def _try_signs(P1, P2, pi, all_plus):
    """Search sign choices on the first facet of P1, propagate to the rest."""
    d = P1.dim
    sigma0 = min(P1.facets)
    src = [list(P1.vertices[i]) for i in sigma0]
    sign_choices = [(1,) * d] if all_plus else _all_signs(d)
    for signs in sign_choices:
        dst = [[s * c for c in P2.vertices[pi[i]]]
               for s, i in zip(signs, sigma0)]
        U = solve_unimodular_from_basis(src, dst)
        if U is None:
            continue
        eps = [0] * P1.m
        for s, i in zip(signs, sigma0):
            eps[i] = s
        ok = True
        for j in range(P1.m):
            if eps[j]:
                continue
            img = mat_vec(U, list(P1.vertices[j]))
            tgt = list(P2.vertices[pi[j]])
            if img == tgt:
                eps[j] = 1
            elif img == [-c for c in tgt]:
                if all_plus:
                    ok = False
                    break
                eps[j] = -1
            else:
                ok = False
                break
        if ok:
            w = EquivalenceWitness(pi=tuple(pi), U=U, eps=tuple(eps))
            assert verify_witness(P1, P2, w)
            return w
    return None


def _all_signs(d):
    out = []
    for mask in range(1 << d):
        out.append(tuple(1 if mask & (1 << t) == 0 else -1 for t in range(d)))
    return out


def unimodular_equivalent(P1, P2):
    for pi in complex_isomorphisms(P1, P2):
        w = _try_signs(P1, P2, pi, all_plus=True)
        if w is not None:
            return w
    return None


def sign_equivalent(P1, P2):
    for pi in complex_isomorphisms(P1, P2):
        w = _try_signs(P1, P2, pi, all_plus=False)
        if w is not None:
            return w
    return None


SIGN_EQUIV = "SignEquiv"
UNIMODULAR_EQUIV = "UnimodularEquiv"
FINGERPRINT_EQUAL = "FingerprintEqual"


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def classify(polytopes, relation=SIGN_EQUIV, B=5, presentations=None,
             fingerprints=None):
    """Partition by the chosen relation.  Expensive pairwise witness searches
    run only inside fingerprint-equal groups (equivalence implies a ring
    isomorphism, hence equal fingerprints).

    Returns dict with classes (sorted lists of ids), witnesses, and for
    SignEquiv the anomaly list: fingerprint-equal but not sign-equivalent
    pairs."""
    from .cohomology import build_presentation

    ids = [P.id if P.id is not None else idx
           for idx, P in enumerate(polytopes)]
    by_id = dict(zip(ids, polytopes))
    if fingerprints is None:
        fingerprints = {}
        for pid, P in zip(ids, polytopes):
            pres = (presentations or {}).get(pid) or build_presentation(P)
            bound = B if pres.n <= 6 else 2
            fingerprints[pid] = fingerprint(pres, B=bound)
    groups = {}
    for pid in ids:
        groups.setdefault(fingerprints[pid], []).append(pid)

    uf = _UnionFind(ids)
    witnesses = {}
    anomalies = []
    if relation == FINGERPRINT_EQUAL:
        for members in groups.values():
            for other in members[1:]:
                uf.union(members[0], other)
    else:
        test = (sign_equivalent if relation == SIGN_EQUIV
                else unimodular_equivalent)
        for members in groups.values():
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    a, b = members[i], members[j]
                    if uf.find(a) == uf.find(b):
                        continue
                    w = test(by_id[a], by_id[b])
                    if w is not None:
                        uf.union(a, b)
                        witnesses[(a, b)] = w
        if relation == SIGN_EQUIV:
            for members in groups.values():
                for i in range(len(members)):
                    for j in range(i + 1, len(members)):
                        if uf.find(members[i]) != uf.find(members[j]):
                            anomalies.append((members[i], members[j]))
    classes = {}
    for pid in ids:
        classes.setdefault(uf.find(pid), []).append(pid)
    partition = sorted(sorted(c) for c in classes.values())
    return {
        "relation": relation,
        "classes": partition,
        "witnesses": witnesses,
        "anomalies": sorted(anomalies),
        "fingerprints": fingerprints,
    }
