"""Rainbow sweeps, the two-color lemma, and the planar dichotomy."""

from __future__ import annotations

import pytest

from conftest import load_fixture
from hellykit.budgets import SearchBudget
from hellykit.colorful import (
    ColoredFamily,
    HyperplaneCover,
    LineCover,
    PiercedClass,
    check_ch,
    dichotomy_report,
    fractional_two_color_search,
    generic_line_class,
    intersecting_class,
    theorem_main_d2,
    two_color_lemma,
)
from hellykit.errors import PreconditionError, ScaleError
from hellykit.geometry import Polyhedron, flat_crosses, hyperplane_crosses
from hellykit.hypergraphs import piercing_number
from hellykit.rationals import rat, vec
from hellykit.serialize import family_from_doc
from hellykit.instances import random_two_colored


def box(lo, hi):
    return Polyhedron.box(vec(lo), vec(hi))


def fixture_family(name):
    fam, _ = family_from_doc(load_fixture(name))
    return fam


def test_check_ch_holds_on_fixture():
    rep = check_ch(fixture_family("family_ch_d2.json"))
    assert rep.holds
    assert rep.checked == 4
    assert rep.violating_rainbow is None


def test_check_ch_refutes_disjoint_boxes():
    rep = check_ch(fixture_family("family_disjoint_boxes.json"))
    assert not rep.holds
    assert rep.violating_rainbow == ((0, 0), (1, 0))
    assert rep.certificate is not None and not rep.certificate.feasible


def test_rainbow_budget_enforced():
    fam = fixture_family("family_ch_d2.json")
    with pytest.raises(ScaleError):
        check_ch(fam, SearchBudget(max_rainbow_tuples=3))


def test_intersecting_class_returns_verified_class():
    fam = fixture_family("family_ch_d2.json")
    k, point = intersecting_class(fam)
    assert all(s.contains(point.coords) for s in fam.classes[k])


def test_intersecting_class_spatial_fixture():
    fam = fixture_family("family_ch_d3.json")
    k, point = intersecting_class(fam)
    assert all(s.contains(point.coords) for s in fam.classes[k])


def test_intersecting_class_needs_dim_plus_one_classes():
    fam = ColoredFamily(2, ((box((0, 0), (1, 1)),), (box((0, 0), (1, 1)),)))
    with pytest.raises(PreconditionError):
        intersecting_class(fam)


def test_intersecting_class_rejects_non_ch_family():
    fam = fixture_family("family_disjoint_boxes.json")
    fam3 = ColoredFamily(2, fam.classes + ((box((0, 0), (9, 9)),),))
    with pytest.raises(PreconditionError):
        intersecting_class(fam3)


def test_two_color_lemma_pierced_side():
    a = [box((0, 0), (2, 2)), box((1, 1), (3, 3))]
    b = [box((0, 0), (10, 10))]
    out = two_color_lemma(a, b)
    assert isinstance(out, PiercedClass)
    point = out.points[0]
    assert all(s.contains(point.coords) for s in a)


def test_two_color_lemma_hyperplane_side():
    a, b = random_two_colored(5, 2)
    out = two_color_lemma(a, b)
    assert isinstance(out, HyperplaneCover)
    assert len(out.hyperplanes) <= 2
    for s in b:
        assert any(hyperplane_crosses(h, s) for h in out.hyperplanes)


def test_two_color_lemma_hyperplane_side_r3():
    a, b = random_two_colored(9, 3)
    out = two_color_lemma(a, b)
    assert isinstance(out, HyperplaneCover)
    assert len(out.hyperplanes) <= 3
    for s in b:
        assert any(hyperplane_crosses(h, s) for h in out.hyperplanes)


def test_two_color_lemma_requires_meeting_pairs():
    a = [box((0, 0), (1, 1)), box((5, 5), (6, 6))]
    b = [box((20, 20), (21, 21))]
    with pytest.raises(PreconditionError):
        two_color_lemma(a, b)


def test_theorem_main_d2_on_fixture():
    fam = fixture_family("family_ch_d2.json")
    fam2 = ColoredFamily(2, fam.classes[:2])
    out = theorem_main_d2(fam2)
    if isinstance(out, PiercedClass):
        point = out.points[0]
        assert all(s.contains(point.coords) for s in fam2.classes[out.class_index])
    else:
        assert isinstance(out, LineCover)
        assert len(out.lines) <= 4
        for s in fam2.all_sets():
            assert any(flat_crosses(line, s) for line in out.lines)


def test_generic_line_class_crosses_whole_class():
    fam = fixture_family("family_ch_d2.json")
    fam2 = ColoredFamily(2, fam.classes[:2])
    k, line = generic_line_class(fam2, seed=3)
    assert line.k == 1
    for s in fam2.classes[k]:
        assert flat_crosses(line, s)


def test_fractional_search_meets_a_target():
    a = [box((0, 0), (2, 2)), box((1, 1), (3, 3))]
    b = [box((0, 0), (4, 4)), box((2, 0), (5, 3))]
    rep = fractional_two_color_search(a, b, rat(1))
    assert rep.holds
    assert rep.pair_count == 4
    covered_points = len(rep.point_covered)
    covered_planes = len(rep.hyperplane_covered)
    assert (
        rat(covered_points) >= rep.gamma_target
        or rat(covered_planes) >= rep.lambda_target
    )


def test_fractional_search_rejects_low_alpha_claim():
    # claimed meeting fraction exceeds the actual one: hypothesis violated
    a = [box((0, 0), (1, 1)), box((10, 10), (11, 11))]
    b = [box((0, 0), (1, 1))]
    with pytest.raises(PreconditionError):
        fractional_two_color_search(a, b, rat(1))


def test_dichotomy_report_structure():
    fam = fixture_family("family_ch_d2.json")
    fam2 = ColoredFamily(2, fam.classes[:2])
    rep = dichotomy_report(fam2, f_budget=1, g_budget=4)
    assert rep.successful
    best = rep.successful[0]
    assert best.pierce.size <= 1 or (best.cover and best.cover.size <= 4)


def test_pierced_class_certificate_is_checkable_downstream():
    # the returned point must be reusable as a one-point transversal
    a = [box((0, 0), (2, 2)), box((1, 1), (3, 3))]
    b = [box((0, 0), (10, 10))]
    out = two_color_lemma(a, b)
    assert isinstance(out, PiercedClass)
    assert piercing_number(a).size == 1
