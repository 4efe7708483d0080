"""Extremal families: the planar pair, the simplex cones, and their audits."""

from __future__ import annotations

import itertools

import pytest

from hellykit.colorful import check_ch
from hellykit.constructions import (
    generate_figure1,
    generate_planar,
    generate_simplex_family,
    max_simplex_facets_crossed,
    relint_margin,
    verify_relint_property,
)
from hellykit.errors import InputError
from hellykit.geometry import (
    AffineFlat,
    flat_crosses,
    polyhedra_intersect,
    polytope_from_vertices,
)
from hellykit.hypergraphs import line_cover_number, piercing_number
from hellykit.rationals import ONE, rat


def test_figure1_shape_and_ch():
    fam = generate_figure1(2, 2)
    assert fam.num_classes == 3
    assert len(fam.classes[0]) == 2
    assert check_ch(fam).holds


def test_figure1_class_piercing_is_n():
    fam = generate_figure1(2, 3)
    for cls in fam.classes[:2]:
        assert piercing_number(list(cls)).size == 3


def test_figure1_diagonal_line_crosses_everything():
    d, n = 3, 2
    fam = generate_figure1(d, n)
    diagonal = AffineFlat.line(
        tuple(rat(0) for _ in range(d)), tuple(ONE for _ in range(d))
    )
    for s in fam.all_sets():
        assert flat_crosses(diagonal, s)


def test_figure1_input_checks():
    with pytest.raises(InputError):
        generate_figure1(1, 1)
    with pytest.raises(InputError):
        generate_figure1(2, 0)


def test_planar_construction_structure():
    c = generate_planar(2, seed=7)
    assert c.f == 2 and c.m == 4
    assert len(c.triangles) == 4
    assert len(c.segments) == 12
    fam = c.family
    assert fam.num_classes == 2


def test_planar_triangles_pairwise_meet_without_triples():
    c = generate_planar(2, seed=7)
    tri = list(c.triangles)
    for a, b in itertools.combinations(tri, 2):
        assert polyhedra_intersect([a, b]).feasible
    for a, b, d in itertools.combinations(tri, 3):
        assert not polyhedra_intersect([a, b, d]).feasible


def test_planar_segments_meet_all_triangles_and_are_disjoint():
    c = generate_planar(1, seed=0)
    seg = list(c.segments)
    for s in seg:
        for t in c.triangles:
            assert polyhedra_intersect([s, t]).feasible
    for a, b in itertools.combinations(seg, 2):
        assert not polyhedra_intersect([a, b]).feasible


def test_planar_is_deterministic_per_seed():
    a = generate_planar(2, seed=11)
    b = generate_planar(2, seed=11)
    assert a == b
    c = generate_planar(2, seed=12)
    assert a.anchors != c.anchors


def test_planar_piercing_numbers():
    c = generate_planar(2, seed=7)
    assert piercing_number(list(c.triangles)).size == 2
    assert piercing_number(list(c.segments)).size == 12


def test_planar_needs_two_lines():
    c = generate_planar(1, seed=0)
    assert line_cover_number(list(c.triangles) + list(c.segments)).size >= 2


def test_planar_input_checks():
    with pytest.raises(InputError):
        generate_planar(0)


def test_simplex_construction_structure():
    c = generate_simplex_family(3, 1, seed=0)
    assert c.d == 3 and c.m == 2
    assert len(c.cone_classes) == 2
    assert len(c.facet_groups) == 4
    fam = c.family
    assert fam.num_classes == 3
    assert check_ch(fam).holds


def test_simplex_pre_shrink_family_also_has_ch():
    c = generate_simplex_family(2, 1, seed=0)
    assert check_ch(c.pre_shrink_family).holds


def test_simplex_cone_triples_are_empty_within_a_class():
    c = generate_simplex_family(3, 2, seed=0)
    for cls in c.cone_classes:
        for trio in itertools.combinations(cls, 3):
            assert not polyhedra_intersect(list(trio)).feasible


def test_simplex_facet_groups_pairwise_disjoint():
    c = generate_simplex_family(3, 2, seed=0)
    for group in c.facet_groups:
        for a, b in itertools.combinations(group, 2):
            assert not polyhedra_intersect([a, b]).feasible


def test_simplex_determinism():
    assert generate_simplex_family(3, 1, seed=5) == generate_simplex_family(
        3, 1, seed=5
    )


def test_simplex_dimension_gate():
    with pytest.raises(InputError):
        generate_simplex_family(5, 1)
    with pytest.raises(InputError):
        generate_simplex_family(1, 1)


def test_relint_sweep_holds_for_the_plane():
    c = generate_simplex_family(2, 1, seed=0)
    rep = verify_relint_property(c)
    assert rep.holds
    assert rep.entries
    assert all(e.margin > 0 for e in rep.entries)


def test_relint_margin_detects_boundary_contact():
    # a simplex vertex lies on the relative boundary of its facets, so it
    # never reaches a positive margin on any of them
    c = generate_simplex_family(2, 1, seed=0)
    corner = polytope_from_vertices(2, ((rat(12), rat(0)),))
    margins = [relint_margin([corner], facet)[0] for facet in c.facets]
    assert all(m is None or m <= 0 for m in margins)
    assert any(m == 0 for m in margins if m is not None)
    # the facet itself sits squarely inside its own relative interior
    own_margin, point = relint_margin([c.facets[0]], c.facets[0])
    assert own_margin is not None and own_margin > 0
    assert c.facets[0].contains(point)


def test_facet_crossing_maximum_is_two():
    for d in (2, 3):
        rep = max_simplex_facets_crossed(d)
        assert rep.value == 2
        assert rep.lines_checked > 0
        assert rep.witness_line is not None
        assert "at most two" in rep.argument
    assert "relative interiors are disjoint" in rep.argument


def test_facet_crossing_dimension_gate():
    with pytest.raises(InputError):
        max_simplex_facets_crossed(5)
