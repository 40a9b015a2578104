"""Sparse multivariate polynomials, graded-lex order, Buchberger, normal forms.

Coefficients are pluggable: exact rationals (fractions.Fraction), Z/p
(ModInt), or polynomials in auxiliary parameters over either (ParamPoly,
used for the "normal form of f^k with symbolic coefficients" computations).
Groebner bases themselves are only ever computed over a field (Q or Z/p).

Monomial order: graded lexicographic induced by x1 < x2 < ... < xn.  Total
degree decides first; on ties the exponent vectors are compared starting at
the *smallest* variable, and the monomial with the smaller exponent there is
the larger one.  (So with x < y < z: xy^2 > x^2 z, z^2 > yz, y^2 > xy; this
is the order under which z^2 leads (-2y+z)z and y^2 leads (-2x+y)y.)
"""

from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# coefficient domains


class ModInt:
    """Element of Z/p.  Small immutable value type."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(self.v + ov, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(self.v - ov, self.p)

    def __rsub__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(ov - self.v, self.p)

    def __mul__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(self.v * ov, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(self.v * pow(ov, -1, self.p), self.p)

    def __rtruediv__(self, o):
        ov = self._val(o)
        if ov is None:
            return NotImplemented
        return ModInt(ov * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __eq__(self, o):
        if isinstance(o, ModInt):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"

    def _val(self, o):
        if isinstance(o, ModInt):
            if o.p != self.p:
                raise ValueError("mixed moduli")
            return o.v
        if isinstance(o, int):
            return o
        return None


class RationalField:
    name = "QQ"
    char = 0

    def from_int(self, n):
        return Fraction(n)

    zero = property(lambda self: Fraction(0))
    one = property(lambda self: Fraction(1))

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p):
        self.p = p
        self.name = f"GF({p})"
        self.char = p

    def from_int(self, n):
        return ModInt(n, self.p)

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def __repr__(self):
        return self.name


QQ = RationalField()
GF2 = PrimeField(2)
GF3 = PrimeField(3)


class ParamPoly:
    """Polynomial in s parameters with coefficients in a base field.

    Acts as a coefficient for Poly: supports ring operations with itself and
    with base-field scalars, and division by a base-field scalar (all that
    normal-form reduction against a monic basis needs).
    """

    __slots__ = ("s", "terms", "base")

    def __init__(self, s, terms, base=QQ):
        self.s = s
        self.base = base
        self.terms = {e: c for e, c in terms.items() if c != 0 * c}

    @classmethod
    def param(cls, s, i, base=QQ):
        e = tuple(1 if j == i else 0 for j in range(s))
        return cls(s, {e: base.one}, base)

    @classmethod
    def const(cls, s, c, base=QQ):
        return cls(s, {(0,) * s: c}, base)

    def _coerce(self, o):
        if isinstance(o, ParamPoly):
            return o
        if isinstance(o, (int, Fraction, ModInt)):
            c = o if not isinstance(o, int) else self.base.from_int(o)
            return ParamPoly.const(self.s, c, self.base)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, self.base.zero) + c
        return ParamPoly(self.s, t, self.base)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.s, {e: -c for e, c in self.terms.items()}, self.base)

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, self.base.zero) + c1 * c2
        return ParamPoly(self.s, t, self.base)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, ParamPoly):
            if len(o.terms) == 1 and not any(sum(e) for e in o.terms):
                o = next(iter(o.terms.values()))
            else:
                raise TypeError("can only divide by scalars")
        if isinstance(o, int):
            o = self.base.from_int(o)
        return ParamPoly(self.s, {e: c / o for e, c in self.terms.items()}, self.base)

    def __eq__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self.s == o.s and self.terms == o.terms

    def __hash__(self):
        return hash((self.s, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def specialize(self, values):
        """Evaluate at numeric parameter values (list of base-field/ints)."""
        acc = self.base.zero
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v = v * values[i]
            acc = acc + v
        return acc

    def integer_primitive(self):
        """Clear denominators / normalize to a primitive integer-coefficient
        tuple form: list of (exponent tuple, int), sign fixed so the first
        coefficient in sorted exponent order is positive."""
        if self.base is not QQ:
            raise ValueError("integer form only over Q")
        if not self.terms:
            return []
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        items = [(e, int(c * den)) for e, c in sorted(self.terms.items(), reverse=True)]
        g = 0
        for _, c in items:
            g = gcd(g, c)
        items = [(e, c // g) for e, c in items]
        if items[0][1] < 0:
            items = [(e, -c) for e, c in items]
        return items

    def __repr__(self):
        return param_poly_str(self)


def param_poly_str(pp, names=None):
    if not pp.terms:
        return "0"
    if names is None:
        names = ["a", "b", "c", "d", "e", "f", "g", "h"][: pp.s]
    bits = []
    for e, c in sorted(pp.terms.items(), reverse=True):
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
        )
        if mono:
            cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(f"{cs}{mono}")
        else:
            bits.append(f"{c}")
    out = bits[0]
    for b in bits[1:]:
        out += " - " + b[1:] if b.startswith("-") else " + " + b
    return out


# ---------------------------------------------------------------------------
# monomial order


def grlex_key(m, var_order=None):
    """Sort key: larger key = larger monomial in the graded order."""
    if var_order is None:
        return (sum(m), tuple(-e for e in m))
    return (sum(m), tuple(-m[v] for v in var_order))


def grlex_compare(m1, m2, var_order=None):
    """-1, 0 or 1 comparing monomials (exponent tuples) in graded lex order
    induced by var_order[0] < var_order[1] < ...  (identity by default)."""
    if len(m1) != len(m2):
        raise ValueError("variable count mismatch")
    k1, k2 = grlex_key(m1, var_order), grlex_key(m2, var_order)
    return (k1 > k2) - (k1 < k2)


def mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1, m2):
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1, m2):
    return tuple(a - b for a, b in zip(m1, m2))


def mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse polynomial: dict monomial (exponent tuple) -> coefficient."""

    __slots__ = ("n", "terms", "field")

    def __init__(self, n, terms, field=QQ):
        self.n = n
        self.field = field
        self.terms = {m: c for m, c in terms.items() if c != 0 * c}

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, {}, field)

    @classmethod
    def const(cls, n, c, field=QQ):
        if isinstance(c, int):
            c = field.from_int(c)
        return cls(n, {(0,) * n: c}, field)

    @classmethod
    def gen(cls, n, i, field=QQ):
        m = tuple(1 if j == i else 0 for j in range(n))
        return cls(n, {m: field.one}, field)

    @classmethod
    def linear(cls, n, coeffs, field=QQ):
        """Degree-1 form sum coeffs[i] * x_i from an integer vector."""
        t = {}
        for i, c in enumerate(coeffs):
            if c:
                m = tuple(1 if j == i else 0 for j in range(n))
                t[m] = field.from_int(c) if isinstance(c, int) else c
        return cls(n, t, field)

    def _coerce_coeff(self, c):
        if isinstance(c, int):
            return self.field.from_int(c)
        return c

    def __add__(self, o):
        if isinstance(o, (int, Fraction, ModInt, ParamPoly)):
            o = Poly.const(self.n, self._coerce_coeff(o), self.field)
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, 0 * c) + c
        return Poly(self.n, t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, o):
        if isinstance(o, (int, Fraction, ModInt, ParamPoly)):
            o = Poly.const(self.n, self._coerce_coeff(o), self.field)
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction, ModInt, ParamPoly)):
            oc = self._coerce_coeff(o)
            return Poly(self.n, {m: c * oc for m, c in self.terms.items()}, self.field)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                prod = c1 * c2
                if m in t:
                    t[m] = t[m] + prod
                else:
                    t[m] = prod
        return Poly(self.n, t, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(self.n, self.field.one, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, int):
            if o == 0:
                return not self.terms
            o = Poly.const(self.n, o, self.field)
        if not isinstance(o, Poly):
            return NotImplemented
        return self.n == o.n and self.terms == o.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def lead_monomial(self):
        return max(self.terms, key=grlex_key)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def monic(self):
        lc = self.lead_coeff()
        return Poly(self.n, {m: c / lc for m, c in self.terms.items()}, self.field)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def graded_part(self, k):
        return Poly(self.n, {m: c for m, c in self.terms.items() if sum(m) == k},
                    self.field)

    def map_coeffs(self, fn, field=None):
        return Poly(self.n, {m: fn(c) for m, c in self.terms.items()},
                    field or self.field)

    def substitute(self, images):
        """Ring map x_i -> images[i] (polynomials in a possibly different
        variable set, same coefficient field)."""
        if not self.terms:
            tgt = images[0].n if images else self.n
            return Poly.zero(tgt, self.field)
        tgt = images[0].n
        out = Poly.zero(tgt, self.field)
        for m, c in self.terms.items():
            part = Poly.const(tgt, c if not isinstance(c, int) else self.field.from_int(c), self.field)
            for i, e in enumerate(m):
                for _ in range(e):
                    part = part * images[i]
            out = out + part
        return out

    def __repr__(self):
        return poly_str(self)


def poly_str(p, names=None):
    """Display format: terms descending in the active order, coefficients as
    integers after clearing denominators (rational field only)."""
    if not p.terms:
        return "0"
    if names is None:
        names = ["x", "y", "z", "u", "v", "w", "s", "t"][: p.n]
        if p.n > 8:
            names = [f"x{i+1}" for i in range(p.n)]
    terms = sorted(p.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
    den = 1
    if isinstance(next(iter(p.terms.values())), Fraction):
        for c in p.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
    bits = []
    for m, c in terms:
        if isinstance(c, Fraction):
            c = int(c * den)
        elif isinstance(c, ModInt):
            c = c.v
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
        if isinstance(c, ParamPoly):
            cs = f"({param_poly_str(c)})"
            bits.append(f"{cs}*{mono}" if mono else cs)
            continue
        if mono:
            cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(f"{cs}{mono}")
        else:
            bits.append(f"{c}")
    out = bits[0]
    for b in bits[1:]:
        out = out + (" - " + b[1:] if b.startswith("-") else " + " + b)
    return out


# ---------------------------------------------------------------------------
# division / Buchberger


def normal_form(f, G):
    """Remainder of f under division by the (monic-lead) family G.

    Works coefficient-parametrically: coefficients of f may be ParamPoly
    while G has scalar coefficients; parameters are treated as scalars.
    """
    basis = G.polys if isinstance(G, GroebnerBasis) else list(G)
    leads = [(g.lead_monomial(), g) for g in basis if g.terms]
    rem = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=grlex_key)
        c = work.pop(m)
        if c == 0 * c:
            continue
        hit = None
        for lm, g in leads:
            if mono_divides(lm, m):
                hit = (lm, g)
                break
        if hit is None:
            rem[m] = rem.get(m, 0 * c) + c
            continue
        lm, g = hit
        q = mono_div(m, lm)
        factor = c / g.terms[lm]
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            mm = mono_mul(gm, q)
            cur = work.get(mm)
            delta = factor * gc
            work[mm] = (cur - delta) if cur is not None else -delta
            if work[mm] == 0 * work[mm]:
                del work[mm]
    return Poly(f.n, rem, f.field)


class GroebnerBasis:
    """Reduced Groebner basis: monic generators, no monomial of any generator
    divisible by another's leading monomial; sorted by leading monomial."""

    __slots__ = ("polys", "n", "field")

    def __init__(self, polys, n, field):
        self.polys = polys
        self.n = n
        self.field = field

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return "GB{" + ", ".join(poly_str(g) for g in self.polys) + "}"


def interreduce(polys):
    """Reduce a family to the canonical reduced (monic) form."""
    basis = [p.monic() for p in polys if p.terms]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = normal_form(basis[i], others)
            if r.terms:
                r = r.monic()
            if r != basis[i]:
                changed = True
            if r.terms:
                basis[i] = r
            else:
                basis.pop(i)
                changed = True
                break
    basis.sort(key=lambda g: grlex_key(g.lead_monomial()))
    return basis


def buchberger(gens, field=None):
    """Reduced Groebner basis of the ideal generated by gens.

    S-pair selection: minimal lcm total degree, ties by generator index pair
    (normal strategy); pairs with coprime leading monomials are skipped.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        raise ValueError("no nonzero generators")
    n = gens[0].n
    field = field or gens[0].field
    G = [g.monic() for g in gens]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (sum(mono_lcm(G[ij[0]].lead_monomial(),
                                         G[ij[1]].lead_monomial())), ij),
        )
        pairs.remove((i, j))
        lmi, lmj = G[i].lead_monomial(), G[j].lead_monomial()
        lcm = mono_lcm(lmi, lmj)
        if lcm == mono_mul(lmi, lmj):  # coprime leads
            continue
        spoly = (G[i] * Poly(n, {mono_div(lcm, lmi): field.one}, field)
                 - G[j] * Poly(n, {mono_div(lcm, lmj): field.one}, field))
        r = normal_form(spoly, G)
        if r.terms:
            G.append(r.monic())
            k = len(G) - 1
            pairs.update((t, k) for t in range(k))
    return GroebnerBasis(interreduce(G), n, field)


def ideal_member(f, G):
    return not normal_form(f, G).terms


def minimal_degree_sequence(gens, field=None):
    """Degrees of a minimal homogeneous generating set, sorted ascending.

    Generators are processed in increasing degree (stable within a degree);
    any generator already in the ideal of the kept ones is discarded.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        return ()
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("minimal_degree_sequence requires homogeneous input")
    field = field or gens[0].field
    ordered = sorted(gens, key=lambda g: g.total_degree())
    kept = []
    gb = None
    for g in ordered:
        if gb is not None and ideal_member(g, gb):
            continue
        kept.append(g)
        gb = buchberger(kept, field)
    return tuple(sorted(g.total_degree() for g in kept))


def reduce_mod_p(poly, p):
    """Coefficient reduction of an integer/rational Poly into GF(p)."""
    fld = PrimeField(p) if p not in (2, 3) else (GF2 if p == 2 else GF3)
    t = {}
    for m, c in poly.terms.items():
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ValueError("denominator not invertible mod p")
            c = c.numerator * pow(c.denominator, -1, p)
        t[m] = ModInt(c if isinstance(c, int) else int(c), fld.p)
    return Poly(poly.n, t, fld)
