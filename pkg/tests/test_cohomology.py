"""Cohomology presentations, characteristic classes, and anticanonical
degrees."""

from fractions import Fraction

from toricfano import polyring as pr
from toricfano.cohomology import (build_presentation, chern_c1,
                                  pontryagin_total, degree_anticanonical,
                                  degree_via_ring)
from toricfano.families import simplex, cross_square, pentagon, hexagon


def ideal_strings(pres):
    return sorted(pr.poly_str(g, pres.names) for g in pres.ideal_gens)


def test_projective_space_presentation():
    pres = build_presentation(simplex(3))
    assert pres.n == 1
    assert ideal_strings(pres) == ["x^4"]
    assert pres.graded_dimensions() == (1, 1, 1, 1)


def same_ideal(pres, table_gens):
    """The presentation ideal equals the ideal of the table's generator
    list (compared through reduced Groebner bases)."""
    ref = pr.buchberger(table_gens)
    return (sorted(map(str, pres.gb().polys))
            == sorted(map(str, ref.polys)))


def test_presentation_id12(fano3):
    pres = build_presentation(fano3[12])
    assert pres.n == 3
    # Z[x,y,z]/(x^2, y(y-z), z(x-z))
    x, y, z = (pr.Poly.gen(3, i) for i in range(3))
    assert same_ideal(pres, [x ** 2, y * (y - z), z * (x - z)])


def test_presentation_id24(fano4):
    pres = build_presentation(fano4[24])
    assert pres.n == 3
    # Z[x,y,z]/(z(x-y), y(y+z-3x), z(z-2x), x^4, x^3 y)
    x, y, z = (pr.Poly.gen(3, i) for i in range(3))
    assert same_ideal(pres, [z * (x - y), y * (y + z - 3 * x),
                             z * (z - 2 * x), x ** 4, x ** 3 * y])


def test_graded_dimension_sum_equals_facet_count(fano3):
    # Euler characteristic of the toric manifold = number of top cones
    for P in fano3.values():
        pres = build_presentation(P)
        assert sum(pres.graded_dimensions()) == len(P.facets)


def test_c1_of_pair_70_141(fano4):
    p70 = build_presentation(fano4[70])
    p141 = build_presentation(fano4[141])
    x, y = pr.Poly.gen(2, 0), pr.Poly.gen(2, 1)
    assert chern_c1(p70) == x + 3 * y
    assert chern_c1(p141) == 2 * x + 3 * y


def test_pontryagin_total_starts_at_one():
    pres = build_presentation(pentagon())
    p = pontryagin_total(pres)
    assert p.graded_part(0) == pr.Poly.const(pres.n, 1)


def test_degree_projective_space():
    for d in (2, 3, 4):
        P = simplex(d)
        assert degree_anticanonical(P) == (d + 1) ** d
        assert degree_via_ring(build_presentation(P)) == (d + 1) ** d


def test_degree_two_routes_agree_surfaces():
    for P in (cross_square(), pentagon(), hexagon()):
        assert degree_anticanonical(P) == degree_via_ring(
            build_presentation(P))


def test_degree_pairs_d3(fano3):
    assert degree_anticanonical(fano3[11]) == 52
    assert degree_anticanonical(fano3[18]) == 44
    assert degree_anticanonical(fano3[10]) == 44
    assert degree_anticanonical(fano3[13]) == 40
