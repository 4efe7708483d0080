"""Transversal numbers, fractional relaxations, and geometric hypergraphs.

Frozen values below were derived by hand before implementation: the
triangle hypergraph (all pairs of three vertices) has tau = 2 and
tau* = 3/2 by the half-weights argument; the Fano plane has tau = 3 and
tau* = 7/3 (uniform weight 1/3 on seven points, matched by nu* via the
same weights on lines).
"""

from __future__ import annotations

import pytest

from conftest import load_fixture
from hellykit.budgets import SearchBudget
from hellykit.errors import InputError, ScaleError
from hellykit.geometry import AffineFlat, Polyhedron
from hellykit.hypergraphs import (
    Hypergraph,
    build_cover_hypergraph,
    build_point_hypergraph,
    candidate_lines,
    duality_report,
    line_cover_number,
    maximal_intersecting_subfamilies,
    nu_b,
    nu_star,
    piercing_number,
    tau,
    tau_greedy,
    tau_star,
    transversal_points,
)
from hellykit.rationals import rat, vec
from hellykit.serialize import hypergraph_from_doc


def hg(n, edges):
    return Hypergraph(n, tuple(frozenset(e) for e in edges))


def triangle():
    return hypergraph_from_doc(load_fixture("hypergraph_triangle.json"))


def fano():
    return hypergraph_from_doc(load_fixture("hypergraph_fano.json"))


def box(lo, hi):
    return Polyhedron.box(vec(lo), vec(hi))


def test_tau_of_the_triangle_is_two():
    result = tau(triangle())
    assert result.size == 2
    assert result.exact
    for e in triangle().edges:
        assert e & set(result.witness)


def test_tau_star_of_the_triangle_is_three_halves():
    result = tau_star(triangle())
    assert result.value == rat(3, 2)


def test_nu_star_equals_tau_star_on_fixtures():
    for h in (triangle(), fano(), hg(3, [[0, 1], [1, 2]])):
        assert nu_star(h).value == tau_star(h).value


def test_fano_frozen_values():
    h = fano()
    assert tau(h).size == 3
    assert tau_star(h).value == rat(7, 3)
    assert nu_b(h, 1) == 1
    assert nu_b(h, 3) == 7


def test_path_hypergraph_middle_vertex():
    h = hg(3, [[0, 1], [1, 2]])
    result = tau(h)
    assert result.size == 1
    assert result.witness == (1,)


def test_duality_report_sandwich():
    rep = duality_report(triangle(), b=2)
    assert rep.nu_b_value == 3
    assert rat(rep.nu_b_value, rep.b) == rat(3, 2)
    assert rep.nu_star_result.value == rat(3, 2)
    assert rep.tau_star_result.value == rat(3, 2)
    assert rep.tau_result.size == 2
    assert rep.sandwich_ok


def test_greedy_upper_bound_never_beats_exact():
    h = fano()
    assert tau_greedy(h).size >= tau(h).size


def test_tau_respects_vertex_budget():
    # a 5-cycle has no dominated or interchangeable vertices, so the
    # reduced core keeps all five and must trip a budget of four
    h = hg(5, [[i, (i + 1) % 5] for i in range(5)])
    tight = SearchBudget(max_tau_vertices=4, max_tau_edges=64)
    with pytest.raises(ScaleError):
        tau(h, tight)


def test_path_reduces_to_forced_vertices_exactly():
    h = hg(30, [[i, i + 1] for i in range(29)])
    tight = SearchBudget(max_tau_vertices=4, max_tau_edges=64)
    assert tau(h, tight).size == 15


def test_empty_edge_rejected():
    with pytest.raises(InputError):
        hg(2, [[]])


def test_maximal_intersecting_subfamilies_triple():
    fam = [box((0, 0), (2, 2)), box((1, 1), (3, 3)), box((10, 10), (11, 11))]
    subs, witnesses = maximal_intersecting_subfamilies(fam)
    assert frozenset({0, 1}) in subs
    assert frozenset({2}) in subs
    assert len(subs) == 2
    for sub, w in zip(subs, witnesses):
        for i in sub:
            assert fam[i].contains(w.coords)


def test_piercing_number_with_points():
    fam = [box((0, 0), (2, 2)), box((1, 1), (3, 3)), box((10, 10), (11, 11))]
    h = build_point_hypergraph(fam)
    result = tau(h)
    assert result.size == 2
    points = transversal_points(h, result)
    for s in fam:
        assert any(s.contains(p.coords) for p in points)
    assert piercing_number(fam).size == 2


def test_empty_set_cannot_be_pierced():
    empty = box((1, 1), (0, 0))
    with pytest.raises(InputError):
        build_point_hypergraph([empty])


def test_candidate_lines_cover_collinear_boxes():
    fam = [box((0, 0), (2, 1)), box((4, 0), (6, 1)), box((8, 0), (10, 1))]
    lines = candidate_lines(fam)
    h = build_cover_hypergraph(fam, lines)
    result = tau(h)
    assert result.size == 1
    assert line_cover_number(fam).size == 1


def test_cover_hypergraph_rejects_uncrossable_set():
    # no candidate line exists for a family of one empty set
    fam = [box((0, 0), (1, 1))]
    with pytest.raises(InputError):
        build_cover_hypergraph(fam, [])


def test_line_cover_uses_diagonal_when_axis_fails():
    fam = [box((0, 0), (1, 1)), box((4, 4), (5, 5)), box((8, 8), (9, 9))]
    assert line_cover_number(fam).size == 1


def test_line_payload_matches_witness():
    fam = [box((0, 0), (2, 1)), box((4, 0), (6, 1))]
    lines = candidate_lines(fam)
    h = build_cover_hypergraph(fam, lines)
    result = tau(h)
    chosen = [h.payload[v] for v in result.witness]
    assert all(isinstance(line, AffineFlat) for line in chosen)
