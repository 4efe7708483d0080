"""Command-line surface: JSON reports, exit codes, and recheckability."""

from __future__ import annotations

import io
import json

import pytest

from conftest import FIXTURES, load_fixture
from hellykit.cli import main
from hellykit.rationals import rat


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


def test_report_envelope_fields(capsys):
    code, report, _ = invoke(
        capsys, "pierce", "--input", str(FIXTURES / "corpus" / "single_triangle.json")
    )
    assert code == 0
    for key in (
        "schema_version",
        "command",
        "request",
        "input_digest",
        "seed",
        "budgets",
        "results",
        "verification",
        "wall_time_ms",
        "exit_code",
    ):
        assert key in report
    assert report["command"] == "pierce"
    assert report["exit_code"] == 0
    assert report["results"]["piercing_number"] == 1


def test_check_ch_holds_and_refutes(capsys):
    code, report, _ = invoke(
        capsys, "check-ch", "--input", str(FIXTURES / "family_ch_d2.json")
    )
    assert code == 0
    assert report["results"]["holds"] is True

    code, report, _ = invoke(
        capsys, "check-ch", "--input", str(FIXTURES / "family_disjoint_boxes.json")
    )
    assert code == 2
    res = report["results"]
    assert res["holds"] is False
    assert res["violating_rainbow"] == [[0, 0], [1, 0]]
    assert res["farkas"], "refutation must carry a Farkas certificate"


def test_generate_then_verify_lower_bound(capsys):
    code, report, _ = invoke(capsys, "generate", "planar", "--f", "2", "--seed", "7")
    assert code == 0
    fam_doc = report["results"]["family"]
    assert len(fam_doc["classes"]) == 2
    assert len(fam_doc["classes"][1]["sets"]) == 12  # 3m segments with m = 2f

    code, report, _ = invoke(
        capsys, "verify-lower-bound", "planar", "--f", "2", "--seed", "7"
    )
    assert code == 0
    claims = {c["claim"]: c for c in report["results"]["claims"]}
    assert claims["piercing number of triangles"]["observed"] >= 2
    assert claims["line cover of the union"]["observed"] >= 2
    assert report["results"]["all_ok"] is True


def test_duality_triangle_with_multiplicity_two(capsys):
    code, report, _ = invoke(
        capsys,
        "duality",
        "--input",
        str(FIXTURES / "hypergraph_triangle.json"),
        "--b",
        "2",
    )
    assert code == 0
    res = report["results"]
    assert res["nu_b"] == 3
    assert rat(res["nu_b_over_b"]) == rat(3, 2)
    assert rat(res["nu_star"]) == rat(3, 2)
    assert rat(res["tau_star"]) == rat(3, 2)
    assert res["tau"] == 2
    assert res["sandwich_ok"] is True


def test_line_cover_collinear_boxes(capsys):
    code, report, _ = invoke(
        capsys,
        "line-cover",
        "--input",
        str(FIXTURES / "corpus" / "three_collinear_boxes.json"),
    )
    assert code == 0
    assert report["results"]["size"] == 1
    assert len(report["results"]["lines"]) == 1


def test_two_color_on_meeting_pairs(capsys, tmp_path):
    from hellykit.instances import random_two_colored
    from hellykit.colorful import ColoredFamily
    from hellykit.serialize import family_to_doc

    a_sets, b_sets = random_two_colored(3, 2)
    doc = family_to_doc(ColoredFamily(2, (tuple(a_sets), tuple(b_sets))), ["A", "B"])
    path = tmp_path / "two.json"
    path.write_text(json.dumps(doc))
    code, report, _ = invoke(capsys, "two-color", "--input", str(path))
    assert code == 0
    res = report["results"]
    assert res["outcome"] in ("pierced", "hyperplanes")
    if res["outcome"] == "hyperplanes":
        assert len(res["hyperplanes"]) <= 2


def test_recheck_agreement_and_tampering(capsys, tmp_path):
    code, report, _ = invoke(
        capsys, "check-ch", "--input", str(FIXTURES / "family_disjoint_boxes.json")
    )
    assert code == 2
    stored = tmp_path / "report.json"
    stored.write_text(json.dumps(report))
    code, again, _ = invoke(capsys, "recheck", "--input", str(stored))
    assert code == 0
    assert again["results"]["agrees"] is True

    flipped = json.loads(stored.read_text())
    flipped["results"]["holds"] = True
    tampered = tmp_path / "flipped.json"
    tampered.write_text(json.dumps(flipped))
    code, verdict, _ = invoke(capsys, "recheck", "--input", str(tampered))
    assert code == 2
    assert verdict["results"]["agrees"] is False

    swapped = json.loads(stored.read_text())
    swapped["request"]["input"]["classes"][0]["label"] = "edited"
    edited = tmp_path / "edited.json"
    edited.write_text(json.dumps(swapped))
    code, verdict, _ = invoke(capsys, "recheck", "--input", str(edited))
    assert code == 2
    assert verdict["results"]["reason"] == "input digest mismatch"


def test_precondition_failures_exit_four(capsys):
    code, report, _ = invoke(
        capsys,
        "intersecting-class",
        "--input",
        str(FIXTURES / "family_disjoint_boxes.json"),
    )
    assert code == 4
    assert report["exit_code"] == 4
    assert "error" in report["results"]


def test_missing_input_file_exits_four(capsys, tmp_path):
    code, report, _ = invoke(
        capsys, "pierce", "--input", str(tmp_path / "missing.json")
    )
    assert code == 4


def test_budget_exhaustion_exits_three(capsys, monkeypatch):
    monkeypatch.setenv("HELLYKIT_MAX_RAINBOW_TUPLES", "1")
    code, report, _ = invoke(
        capsys, "check-ch", "--input", str(FIXTURES / "family_ch_d2.json")
    )
    assert code == 3
    assert report["budgets"]["max_rainbow_tuples"] == 1
    assert "budget" in json.dumps(report["results"])


def test_pretty_output_keeps_stdout_json(capsys):
    code, report, err = invoke(
        capsys,
        "pierce",
        "--input",
        str(FIXTURES / "corpus" / "single_triangle.json"),
        "--pretty",
    )
    assert code == 0
    assert report["results"]["piercing_number"] == 1
    assert err.strip(), "--pretty should print a summary table to stderr"


def test_stdin_input(capsys, monkeypatch):
    doc = load_fixture("corpus/two_disjoint_boxes.json")
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    code, report, _ = invoke(capsys, "pierce", "--input", "-")
    assert code == 0
    assert report["results"]["piercing_number"] == 2


def test_svg_rendering_is_planar_only(capsys, tmp_path):
    target = tmp_path / "family.svg"
    code, report, _ = invoke(
        capsys, "generate", "planar", "--f", "1", "--svg", str(target)
    )
    assert code == 0
    assert target.read_text().startswith("<svg")

    code, report, _ = invoke(
        capsys, "generate", "figure1", "--svg", str(tmp_path / "nope.svg")
    )
    assert code == 4


def test_relint_check_runs_in_the_plane(capsys):
    code, report, _ = invoke(capsys, "relint-check", "--d", "2", "--f", "1")
    assert code == 0
    assert report["results"]["holds"] is True


def test_generic_line_crosses_a_class(capsys, tmp_path):
    from hellykit.instances import random_ch_pair
    from hellykit.serialize import family_to_doc

    doc = family_to_doc(random_ch_pair(0))
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    code, report, _ = invoke(capsys, "generic-line", "--input", str(path))
    assert code == 0
    assert "line" in report["results"]


def test_fractional_two_color_threshold(capsys, tmp_path):
    from hellykit.instances import random_fractional_instance
    from hellykit.colorful import ColoredFamily
    from hellykit.serialize import family_to_doc

    a_sets, b_sets, alpha = random_fractional_instance(1)
    doc = family_to_doc(ColoredFamily(2, (tuple(a_sets), tuple(b_sets))), ["A", "B"])
    path = tmp_path / "frac.json"
    path.write_text(json.dumps(doc))
    code, report, _ = invoke(
        capsys, "fractional-two-color", "--input", str(path), "--alpha", str(alpha)
    )
    assert code == 0
