"""Named infinite families of smooth Fano polytopes.

Base polytopes in low dimension (simplices, del Pezzo, the five-gon and
six-gon surfaces, bipyramid families Y/Z over them, double bipyramids W)
plus direct-sum constructors that realize the general-dimension members as
products with hexagon factors.  Vertex orderings follow the conventions
under which the cohomology generator names x, y, z, ... in the golden
tables are attached to vertices.
"""

from .polytope import SmoothFanoPolytope, direct_sum


def _e(d, i, s=1):
    """s * e_i (1-based) in Z^d."""
    v = [0] * d
    v[i - 1] = s
    return tuple(v)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def segment():
    """P^1: the 1-dimensional smooth Fano polytope."""
    return SmoothFanoPolytope([(1,), (-1,)])


def simplex(d, id=None):
    """The d-simplex e_1, ..., e_d, -(e_1+...+e_d) (projective space)."""
    verts = [_e(d, i) for i in range(1, d + 1)]
    verts.append(tuple([-1] * d))
    return SmoothFanoPolytope(verts, id=id)


def cross_square():
    """F0 = P^1 x P^1."""
    return SmoothFanoPolytope([(1, 0), (0, 1), (-1, 0), (0, -1)])


def hirzebruch():
    """F1: the blow-up of P^2 at a point."""
    return SmoothFanoPolytope([(1, 0), (0, 1), (-1, 1), (0, -1)])


def pentagon():
    """P5: the five-gon e_1, e_2, -e_1+e_2, -e_2, e_1-e_2."""
    return SmoothFanoPolytope([(1, 0), (0, 1), (-1, 1), (0, -1), (1, -1)])


def hexagon():
    """P6: the six-gon with vertices +-e_1, +-e_2, +-(e_1-e_2)."""
    return SmoothFanoPolytope(
        [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])


def del_pezzo(d, id=None):
    """DP(d): +-e_1, ..., +-e_d, +-(e_1+...+e_d) (d even)."""
    verts = []
    for i in range(1, d + 1):
        verts.append(_e(d, i))
    for i in range(1, d + 1):
        verts.append(_e(d, i, -1))
    verts.append(tuple([1] * d))
    verts.append(tuple([-1] * d))
    return SmoothFanoPolytope(verts, id=id)


# ---------------------------------------------------------------------------
# Y family: bipyramids over hexagon powers, V = 3d - 1, d odd.
# d = 3 member with vertex order e2, e3, -e2+e3, -e2, -e3, e2-e3, e1, -e1+*.

def _y_base(star):
    d = 3
    verts = [_e(d, 2), _e(d, 3), _add(_e(d, 2, -1), _e(d, 3)),
             _e(d, 2, -1), _e(d, 3, -1), _add(_e(d, 2), _e(d, 3, -1)),
             _e(d, 1), _add(_e(d, 1, -1), star)]
    return SmoothFanoPolytope(verts)


def y_family(i, d=3, id=None):
    """Y_i^d for i in {1, 2} and odd d >= 3."""
    if i not in (1, 2) or d < 3 or d % 2 == 0:
        raise ValueError("Y_i^d needs i in {1,2} and odd d >= 3")
    P = _y_base((0, 0, 0) if i == 1 else _e(3, 2))
    for _ in range((d - 3) // 2):
        P = direct_sum(P, hexagon())
    P.id = id
    return P


def y2_cube(id=None):
    """Y_2^3 with the vertex ordering of the golden tables."""
    return _y_base(_e(3, 2))


# ---------------------------------------------------------------------------
# Z family: bipyramids over pentagon x hexagon powers, V = 3d - 2, d odd.
# d = 3 member with vertex order e2, e3, -e2+e3, -e3, e2-e3, e1, -e1+*.

def z_base(i):
    d = 3
    if i == 1:
        star = (0, 0, 0)
    elif i == 2:
        star = _e(d, 2)
    elif i == 3:
        star = _e(d, 3)
    elif i == 4:
        star = _e(d, 3, -1)
    else:
        raise ValueError("Z_i needs i in 1..4")
    verts = [_e(d, 2), _e(d, 3), _add(_e(d, 2, -1), _e(d, 3)),
             _e(d, 3, -1), _add(_e(d, 2), _e(d, 3, -1)),
             _e(d, 1), _add(_e(d, 1, -1), star)]
    return SmoothFanoPolytope(verts)


def z_family(i, d=3, id=None):
    """Z_i^d for i in 1..4 and odd d >= 3."""
    if d < 3 or d % 2 == 0:
        raise ValueError("Z_i^d needs odd d >= 3")
    P = z_base(i)
    for _ in range((d - 3) // 2):
        P = direct_sum(P, hexagon())
    P.id = id
    return P


# ---------------------------------------------------------------------------
# W family: double bipyramids over hexagon powers, V = 3d - 2, d even.
# d = 4 member with vertex order
#   e3, e4, -e3+e4, -e3, -e4, e3-e4, e1, -e1+*, e2, -e2+star.

_W_PARAMS = {
    1: ((0, 0, 0, 0), (0, 0, 0, 0)),
    2: ("e2", (0, 0, 0, 0)),
    3: ("e2", "e3"),
    4: ("e3", (0, 0, 0, 0)),
    5: ("e3", "e3"),
    6: ("e3", "e4"),
    7: ("e3", "-e3"),
    8: ("e3", "-e4"),
}


def _w_vec(spec):
    if isinstance(spec, tuple):
        return spec
    sign = -1 if spec.startswith("-") else 1
    idx = int(spec[-1])
    return _e(4, idx, sign)


def w_base(i):
    d = 4
    if i not in _W_PARAMS:
        raise ValueError("W_i needs i in 1..8")
    star1, star2 = (_w_vec(s) for s in _W_PARAMS[i])
    verts = [_e(d, 3), _e(d, 4), _add(_e(d, 3, -1), _e(d, 4)),
             _e(d, 3, -1), _e(d, 4, -1), _add(_e(d, 3), _e(d, 4, -1)),
             _e(d, 1), _add(_e(d, 1, -1), star1),
             _e(d, 2), _add(_e(d, 2, -1), star2)]
    return SmoothFanoPolytope(verts)


def w_family(i, d=4, id=None):
    """W_i^d for i in 1..8 and even d >= 4."""
    if d < 4 or d % 2:
        raise ValueError("W_i^d needs even d >= 4")
    P = w_base(i)
    for _ in range((d - 4) // 2):
        P = direct_sum(P, hexagon())
    P.id = id
    return P


def mbn_formula(family, i, d):
    """Closed-form maximal basis numbers of the infinite families."""
    if family == "Y":
        return (1 if i == 1 else -1) + 3 * (d - 1) // 2
    if family == "Z":
        return {1: 3, 2: 1, 3: 2, 4: 2}[i] + 3 * (d - 3) // 2
    if family == "W":
        base = {1: 5, 2: 4, 3: 2, 4: 3, 5: 3, 6: 2, 7: 3, 8: 2}[i]
        return base + 3 * (d - 4) // 2
    raise ValueError(f"unknown family {family!r}")
