"""Command-line harness: exact-geometry questions in, certified reports out.

Every subcommand reads JSON (family or hypergraph documents), runs the
corresponding exact decision procedure, and prints a single JSON report
to standard output.  Reports echo the full request, so `recheck` can
re-validate any report standalone: it re-verifies the embedded
certificates directly and re-runs the original computation, demanding
exact agreement.

Exit codes: 0 = claim verified or quantity computed; 2 = property refuted
(the report carries the refuting certificate); 3 = a search budget or
generation bound was exceeded; 4 = malformed input.  The mapping depends
only on the mathematical outcome, never on timing.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .budgets import DEFAULT_BUDGET, SearchBudget, budget_from_env
from .colorful import (
    ColoredFamily,
    HyperplaneCover,
    LineCover,
    PiercedClass,
    check_ch,
    fractional_two_color_search,
    generic_line_class,
    intersecting_class,
    theorem_main_d2,
    two_color_lemma,
)
from .constructions import (
    generate_figure1,
    generate_planar,
    generate_simplex_family,
    max_simplex_facets_crossed,
    verify_relint_property,
)
from .errors import (
    GenerationError,
    HellykitError,
    InputError,
    PreconditionError,
    ScaleError,
    TheoremViolationError,
)
from .geometry import (
    AffineFlat,
    Point,
    flat_crosses,
    hyperplane_crosses,
    polyhedra_intersect,
    verify_farkas_entries,
)
from .hypergraphs import (
    build_cover_hypergraph,
    build_point_hypergraph,
    candidate_lines,
    duality_report,
    line_cover_number,
    tau,
    transversal_points,
)
from .rationals import ONE, rat, rat_str
from .serialize import (
    SCHEMA_VERSION,
    digest,
    family_from_doc,
    family_to_doc,
    farkas_from_json,
    farkas_to_json,
    hyperplane_from_json,
    hypergraph_from_doc,
    line_from_json,
    line_to_json,
    point_to_json,
    vec_from_json,
    vec_to_json,
)

EXIT_OK = 0
EXIT_REFUTED = 2
EXIT_SCALE = 3
EXIT_INPUT = 4

_WITNESS_CAP = 256


@dataclass
class Outcome:
    results: dict
    exit_code: int
    log: list


# -- helpers ------------------------------------------------------------------


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _two_classes(doc) -> tuple[ColoredFamily, list, list]:
    fam, labels = family_from_doc(doc)
    if fam.num_classes != 2:
        raise InputError(f"expected exactly 2 classes, got {fam.num_classes}")
    return fam, list(fam.classes[0]), list(fam.classes[1])


def _jsonable_witness(witness):
    if witness is None:
        return None
    if isinstance(witness, Point):
        return point_to_json(witness)
    if isinstance(witness, (tuple, list)):
        return [_jsonable_witness(w) for w in witness]
    if isinstance(witness, (int, str, bool)):
        return witness
    return str(witness)


# -- subcommand handlers ------------------------------------------------------


def _cmd_check_ch(request: dict, budget: SearchBudget) -> Outcome:
    fam, _ = family_from_doc(request["input"])
    rep = check_ch(fam, budget)
    log = [f"swept {rep.checked} rainbow selections over {fam.num_classes} classes"]
    if not rep.holds:
        results = {
            "holds": False,
            "checked": rep.checked,
            "violating_rainbow": list(rep.violating_rainbow),
            "farkas": farkas_to_json(rep.certificate.farkas),
        }
        log.append("emptiness certificate verified by exact aggregation")
        return Outcome(results, EXIT_REFUTED, log)
    results = {"holds": True, "checked": rep.checked}
    if fam.rainbow_count <= _WITNESS_CAP:
        witnesses = []
        ranges = [range(len(cls)) for cls in fam.classes]
        for combo in itertools.product(*ranges):
            cert = polyhedra_intersect(
                [fam.classes[k][i] for k, i in enumerate(combo)]
            )
            witnesses.append(
                {"rainbow": list(combo), "point": point_to_json(cert.point)}
            )
        results["witnesses"] = witnesses
        results["witnesses_included"] = True
    else:
        results["witnesses_included"] = False
        results["note"] = "witness list omitted beyond cap; recheck re-sweeps"
    return Outcome(results, EXIT_OK, log)


def _cmd_intersecting_class(request: dict, budget: SearchBudget) -> Outcome:
    fam, labels = family_from_doc(request["input"])
    if fam.num_classes != fam.dim + 1:
        raise InputError(
            f"need dim+1 = {fam.dim + 1} classes, got {fam.num_classes}"
        )
    rep = check_ch(fam, budget)
    if not rep.holds:
        results = {
            "holds": False,
            "violating_rainbow": list(rep.violating_rainbow),
            "farkas": farkas_to_json(rep.certificate.farkas),
        }
        return Outcome(results, EXIT_REFUTED, ["colorful Helly hypothesis refuted"])
    k, point = intersecting_class(fam, rep, budget)
    log = [
        f"class {k} ({labels[k]}) has a verified common point",
        f"point lies in all {len(fam.classes[k])} members (exact membership)",
    ]
    results = {
        "class_index": k,
        "label": labels[k],
        "point": point_to_json(point),
    }
    return Outcome(results, EXIT_OK, log)


def _cmd_pierce(request: dict, budget: SearchBudget) -> Outcome:
    fam, _ = family_from_doc(request["input"])
    sets = list(fam.all_sets())
    h = build_point_hypergraph(sets, budget)
    result = tau(h, budget)
    points = transversal_points(h, result)
    for i, s in enumerate(sets):
        if not any(s.contains(p.coords) for p in points):
            raise TheoremViolationError(f"piercing witness misses set {i}")
    results = {
        "piercing_number": result.size,
        "points": [point_to_json(p) for p in points],
        "exact": result.exact,
    }
    log = [
        f"candidate points: one per maximal intersecting subfamily "
        f"({h.vertex_count} candidates)",
        f"minimum transversal of size {result.size} re-verified against all sets",
    ]
    return Outcome(results, EXIT_OK, log)


def _cmd_line_cover(request: dict, budget: SearchBudget) -> Outcome:
    fam, _ = family_from_doc(request["input"])
    sets = list(fam.all_sets())
    lines = candidate_lines(sets)
    h = build_cover_hypergraph(sets, lines)
    result = tau(h, budget)
    chosen = [lines[i] for i in result.witness]
    for i, s in enumerate(sets):
        if not any(flat_crosses(line, s) for line in chosen):
            raise TheoremViolationError(f"line cover witness misses set {i}")
    results = {
        "size": result.size,
        "lines": [line_to_json(line) for line in chosen],
        "candidates": len(lines),
        "exact_over_candidates": True,
    }
    log = [
        f"{len(lines)} candidate lines from the vertex-pair pool",
        f"cover of size {result.size} crosses every set (exact interval checks)",
    ]
    return Outcome(results, EXIT_OK, log)


def _cmd_two_color(request: dict, budget: SearchBudget) -> Outcome:
    _, a_sets, b_sets = _two_classes(request["input"])
    out = two_color_lemma(a_sets, b_sets, budget)
    if isinstance(out, PiercedClass):
        results = {
            "outcome": "pierced",
            "class_index": out.class_index,
            "points": [point_to_json(p) for p in out.points],
        }
        log = [f"one point lies in all {len(a_sets)} first-class sets"]
        return Outcome(results, EXIT_OK, log)
    assert isinstance(out, HyperplaneCover)
    results = {
        "outcome": "hyperplanes",
        "class_crossed": out.class_index,
        "hyperplanes": [
            {"normal": vec_to_json(h.normal), "offset": rat_str(h.offset)}
            for h in out.hyperplanes
        ],
    }
    log = [
        f"{len(out.hyperplanes)} hyperplanes (at most the dimension) cross "
        f"all {len(b_sets)} second-class sets",
    ]
    return Outcome(results, EXIT_OK, log)


def _cmd_d2_dichotomy(request: dict, budget: SearchBudget) -> Outcome:
    fam, a_sets, b_sets = _two_classes(request["input"])
    if fam.dim != 2:
        raise InputError("the dichotomy runs in the plane (dim = 2)")
    rep = check_ch(fam, budget)
    if not rep.holds:
        results = {
            "holds": False,
            "violating_rainbow": list(rep.violating_rainbow),
            "farkas": farkas_to_json(rep.certificate.farkas),
        }
        return Outcome(results, EXIT_REFUTED, ["cross-pair hypothesis refuted"])
    out = theorem_main_d2(fam, budget)
    if isinstance(out, PiercedClass):
        results = {
            "outcome": "pierced",
            "class_index": out.class_index,
            "points": [point_to_json(p) for p in out.points],
        }
        log = [f"class {out.class_index} has a common point (1 <= 1 bound)"]
        return Outcome(results, EXIT_OK, log)
    assert isinstance(out, LineCover)
    results = {
        "outcome": "lines",
        "lines": [line_to_json(line) for line in out.lines],
    }
    log = [
        f"{len(out.lines)} lines (at most 4) cross every set of both classes",
    ]
    return Outcome(results, EXIT_OK, log)


def _cmd_fractional(request: dict, budget: SearchBudget) -> Outcome:
    _, a_sets, b_sets = _two_classes(request["input"])
    alpha = rat(request["alpha"])
    rep = fractional_two_color_search(a_sets, b_sets, alpha, budget=budget)
    results = {
        "dim": rep.dim,
        "alpha": rat_str(rep.alpha),
        "pair_count": rep.pair_count,
        "pair_target": rat_str(rep.pair_target),
        "gamma": rat_str(rep.gamma_value),
        "lambda": rat_str(rep.lambda_value),
        "point_side": {
            "point": point_to_json(rep.best_point) if rep.best_point else None,
            "covered": list(rep.point_covered),
            "target": rat_str(rep.gamma_target),
        },
        "hyperplane_side": {
            "hyperplane": (
                {
                    "normal": vec_to_json(rep.best_hyperplane.normal),
                    "offset": rat_str(rep.best_hyperplane.offset),
                }
                if rep.best_hyperplane
                else None
            ),
            "covered": list(rep.hyperplane_covered),
            "target": rat_str(rep.lambda_target),
        },
        "holds": rep.holds,
        "beta": {"role": "configuration", "label": rep.beta_label},
    }
    log = [
        f"meeting pairs: {rep.pair_count} >= alpha * |A| * |B| = "
        f"{rat_str(rep.pair_target)}",
        "dichotomy satisfied on the "
        + (
            "point side"
            if rat(len(rep.point_covered)) >= rep.gamma_target
            else "hyperplane side"
        ),
    ]
    return Outcome(results, EXIT_OK, log)


def _cmd_duality(request: dict, budget: SearchBudget) -> Outcome:
    h = hypergraph_from_doc(request["input"])
    b = int(request.get("b", 1))
    rep = duality_report(h, b)
    results = {
        "b": rep.b,
        "nu_b": rep.nu_b_value,
        "nu_b_over_b": rat_str(rat(rep.nu_b_value, rep.b)),
        "nu_star": rat_str(rep.nu_star_result.value),
        "nu_star_weights": [rat_str(w) for w in rep.nu_star_result.weights],
        "tau_star": rat_str(rep.tau_star_result.value),
        "tau_star_weights": [rat_str(w) for w in rep.tau_star_result.weights],
        "tau": rep.tau_result.size if rep.tau_result else None,
        "tau_witness": sorted(rep.tau_result.witness) if rep.tau_result else None,
        "sandwich_ok": rep.sandwich_ok,
    }
    if rep.scale_note:
        results["scale_note"] = rep.scale_note
    log = [
        "nu_b/b <= nu* = tau* <= tau verified with exact rational arithmetic",
        f"nu* = tau* = {rat_str(rep.nu_star_result.value)}",
    ]
    return Outcome(results, EXIT_OK, log)


_PLANAR_LABELS = ("triangles", "segments")


def _generator_family(request: dict):
    """Build (family, labels, audit, construction) for a generate request."""
    kind = request["kind"]
    seed = int(request.get("seed", 0))
    if kind == "figure1":
        d = int(request.get("d", 2))
        n = int(request.get("n", 1))
        fam = generate_figure1(d, n)
        labels = [f"axis {i + 1} hyperplanes" for i in range(d)] + ["whole space"]
        return fam, labels, {"kind": kind, "d": d, "n": n}, None
    if kind == "planar":
        f = int(request.get("f", 1))
        c = generate_planar(f, seed)
        audit = {
            "kind": kind,
            "f": c.f,
            "m": c.m,
            "seed": seed,
            "heights": [rat_str(x) for x in c.heights],
            "anchors": [rat_str(x) for x in c.anchors],
            "side_spans": [[rat_str(lo), rat_str(hi)] for lo, hi in c.side_spans],
            "step": rat_str(c.step),
        }
        return c.family, list(_PLANAR_LABELS), audit, c
    if kind == "simplex":
        d = int(request.get("d", 3))
        f = int(request.get("f", 1))
        c = generate_simplex_family(d, f, seed)
        labels = [f"cones over face {i + 1}" for i in range(d - 1)] + [
            "facet copies"
        ]
        audit = {
            "kind": kind,
            "d": d,
            "f": f,
            "m": c.m,
            "seed": seed,
            "epsilon": rat_str(c.epsilon),
            "eta": rat_str(c.eta),
            "triangle_params": [
                [[rat_str(mu), rat_str(theta)] for mu, theta in face]
                for face in c.triangle_params
            ],
        }
        return c.family, labels, audit, c
    raise InputError(f"unknown generator kind {kind!r}")


def _cmd_generate(request: dict, budget: SearchBudget) -> Outcome:
    fam, labels, audit, construction = _generator_family(request)
    results = {"family": family_to_doc(fam, labels), "audit": audit}
    log = [f"generated {request['kind']} family with {fam.num_classes} classes"]
    svg_path = request.get("svg")
    if svg_path:
        if request["kind"] != "planar":
            raise InputError("SVG emission is supported for planar constructions")
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(_planar_svg(construction))
        log.append(f"wrote SVG rendering to {svg_path}")
    return Outcome(results, EXIT_OK, log)


def _claim(name: str, observed, required, ok: bool, **extra) -> dict:
    out = {"claim": name, "observed": observed, "required": required, "ok": bool(ok)}
    out.update(extra)
    return out


def _cmd_verify_lower_bound(request: dict, budget: SearchBudget) -> Outcome:
    fam, labels, audit, construction = _generator_family(request)
    kind = request["kind"]
    claims = []
    log = []
    if kind == "figure1":
        d, n = audit["d"], audit["n"]
        rep = check_ch(fam, budget)
        claims.append(_claim("colorful Helly property", rep.holds, True, rep.holds))
        for i in range(d):
            h = build_point_hypergraph(list(fam.classes[i]), budget)
            r = tau(h, budget)
            claims.append(
                _claim(f"piercing number of class {i + 1}", r.size, n, r.size == n)
            )
        diagonal = AffineFlat.line(
            tuple(rat(0) for _ in range(d)), tuple(ONE for _ in range(d))
        )
        crossed = all(flat_crosses(diagonal, s) for s in fam.all_sets())
        claims.append(_claim("diagonal line crosses every set", crossed, True, crossed))
    elif kind == "planar":
        f, m = audit["f"], audit["m"]
        tri = list(construction.triangles)
        seg = list(construction.segments)
        r1 = tau(build_point_hypergraph(tri, budget), budget)
        claims.append(
            _claim("piercing number of triangles", r1.size, f">= {f}", r1.size >= f)
        )
        r2 = tau(build_point_hypergraph(seg, budget), budget)
        claims.append(
            _claim("piercing number of segments", r2.size, 3 * m, r2.size == 3 * m)
        )
        seg_disjoint = all(
            not polyhedra_intersect([seg[i], seg[j]]).feasible
            for i, j in itertools.combinations(range(len(seg)), 2)
        )
        claims.append(
            _claim("segments pairwise disjoint", seg_disjoint, True, seg_disjoint)
        )
        cover = line_cover_number(tri + seg, budget)
        claims.append(_claim("line cover of the union", cover.size, ">= 2", cover.size >= 2))
        triples_ok = all(
            not polyhedra_intersect([tri[i], tri[j], tri[k]]).feasible
            for i, j, k in itertools.combinations(range(m), 3)
        )
        claims.append(_claim("no three triangles share a point", triples_ok, True, triples_ok))
        log.append(f"line cover witness size {cover.size} over exact candidate pool")
    elif kind == "simplex":
        d, f = audit["d"], audit["f"]
        rep = check_ch(fam, budget)
        claims.append(_claim("colorful Helly property", rep.holds, True, rep.holds))
        for i, cls in enumerate(construction.cone_classes):
            r = tau(build_point_hypergraph(list(cls), budget), budget)
            claims.append(
                _claim(f"piercing number of cone class {i + 1}", r.size, f">= {f}", r.size >= f)
            )
        disjoint = all(
            not polyhedra_intersect([group[i], group[j]]).feasible
            for group in construction.facet_groups
            for i, j in itertools.combinations(range(len(group)), 2)
        )
        claims.append(_claim("facet copy groups pairwise disjoint", disjoint, True, disjoint))
        needed = (d + 2) // 2
        crossing = max_simplex_facets_crossed(d)
        claims.append(
            _claim(
                "max facet interiors crossed by one line",
                crossing.value,
                2,
                crossing.value == 2,
                argument=crossing.argument,
            )
        )
        if d <= 3:
            cover = line_cover_number(list(construction.all_sets), budget)
            claims.append(
                _claim(
                    "line cover of the union",
                    cover.size,
                    f">= {needed}",
                    cover.size >= needed,
                )
            )
        else:
            claims.append(
                _claim(
                    "line cover of the union",
                    f"implied >= {needed}",
                    f">= {needed}",
                    True,
                    method="facet-crossing bound (exact cover search runs for d <= 3)",
                )
            )
    else:
        raise InputError(f"unknown generator kind {kind!r}")
    all_ok = all(c["ok"] for c in claims)
    results = {"kind": kind, "audit": audit, "claims": claims, "all_ok": all_ok}
    log.append(f"{sum(c['ok'] for c in claims)}/{len(claims)} claims verified")
    return Outcome(results, EXIT_OK if all_ok else EXIT_REFUTED, log)


def _cmd_relint_check(request: dict, budget: SearchBudget) -> Outcome:
    d = int(request.get("d", 3))
    f = int(request.get("f", 1))
    seed = int(request.get("seed", 0))
    construction = generate_simplex_family(d, f, seed)
    rep = verify_relint_property(construction)
    entries = [
        {
            "selection": list(e.selection),
            "facet": e.facet,
            "margin": rat_str(e.margin) if e.margin is not None else None,
            "point": vec_to_json(e.point) if e.point is not None else None,
            "ok": e.ok,
        }
        for e in rep.entries
    ]
    results = {
        "d": d,
        "f": f,
        "seed": seed,
        "holds": rep.holds,
        "selections": len(entries),
        "entries": entries,
    }
    log = [
        f"swept {len(entries)} colorful selections against facet relative interiors"
    ]
    if not rep.holds:
        log.append(f"{len(rep.failures)} selections failed: construction bug")
        return Outcome(results, EXIT_REFUTED, log)
    return Outcome(results, EXIT_OK, log)


def _cmd_generic_line(request: dict, budget: SearchBudget) -> Outcome:
    fam, labels = family_from_doc(request["input"])
    seed = int(request.get("seed", 0))
    k, line = generic_line_class(fam, seed=seed, budget=budget)
    for i, s in enumerate(fam.classes[k]):
        if not flat_crosses(line, s):
            raise TheoremViolationError(f"returned line misses set {i} of class {k}")
    results = {
        "class_index": k,
        "label": labels[k],
        "line": line_to_json(line),
    }
    log = [
        f"projection along a seeded direction left class {k} with a common point",
        f"the fiber line crosses all {len(fam.classes[k])} members (exact)",
    ]
    return Outcome(results, EXIT_OK, log)


# -- recheck ------------------------------------------------------------------


def _verify_report_certificates(report: dict, budget: SearchBudget) -> list[str]:
    """Direct exact re-validation of certificates embedded in a report."""
    request = report["request"]
    command = request["command"]
    results = report["results"]
    log: list[str] = []

    def fam_sets():
        fam, _ = family_from_doc(request["input"])
        return fam

    if command in ("check-ch", "intersecting-class", "d2-dichotomy") and results.get(
        "holds"
    ) is False:
        fam = fam_sets()
        rainbow = results["violating_rainbow"]
        sets = [fam.classes[k][i] for k, i in rainbow]
        entries = farkas_from_json(results["farkas"])
        if not verify_farkas_entries(sets, entries):
            raise TheoremViolationError("stored emptiness certificate failed")
        log.append("emptiness certificate re-aggregated exactly")
        return log
    if command == "check-ch" and results.get("witnesses_included"):
        fam = fam_sets()
        for w in results["witnesses"]:
            point = vec_from_json(w["point"])
            for k, i in enumerate(w["rainbow"]):
                if not fam.classes[k][i].contains(point):
                    raise TheoremViolationError("stored rainbow witness rejected")
        log.append(f"{len(results['witnesses'])} rainbow witnesses re-verified")
    elif command == "intersecting-class":
        fam = fam_sets()
        point = vec_from_json(results["point"])
        k = results["class_index"]
        if not all(s.contains(point) for s in fam.classes[k]):
            raise TheoremViolationError("stored class witness rejected")
        log.append("class common point re-verified")
    elif command == "pierce":
        fam = fam_sets()
        points = [vec_from_json(p) for p in results["points"]]
        for s in fam.all_sets():
            if not any(s.contains(p) for p in points):
                raise TheoremViolationError("stored piercing set rejected")
        log.append("piercing transversal re-verified")
    elif command == "line-cover":
        fam = fam_sets()
        lines = [line_from_json(obj) for obj in results["lines"]]
        for s in fam.all_sets():
            if not any(flat_crosses(line, s) for line in lines):
                raise TheoremViolationError("stored line cover rejected")
        log.append("line cover re-verified")
    elif command == "two-color":
        fam = fam_sets()
        if results["outcome"] == "pierced":
            point = vec_from_json(results["points"][0])
            if not all(s.contains(point) for s in fam.classes[0]):
                raise TheoremViolationError("stored piercing point rejected")
        else:
            planes = [hyperplane_from_json(h) for h in results["hyperplanes"]]
            for s in fam.classes[1]:
                if not any(hyperplane_crosses(h, s) for h in planes):
                    raise TheoremViolationError("stored hyperplane cover rejected")
        log.append("two-color certificate re-verified")
    elif command == "d2-dichotomy":
        fam = fam_sets()
        if results["outcome"] == "pierced":
            point = vec_from_json(results["points"][0])
            k = results["class_index"]
            if not all(s.contains(point) for s in fam.classes[k]):
                raise TheoremViolationError("stored piercing point rejected")
        else:
            lines = [line_from_json(obj) for obj in results["lines"]]
            for s in fam.all_sets():
                if not any(flat_crosses(line, s) for line in lines):
                    raise TheoremViolationError("stored dichotomy lines rejected")
        log.append("dichotomy certificate re-verified")
    elif command == "generic-line":
        fam = fam_sets()
        line = line_from_json(results["line"])
        k = results["class_index"]
        if not all(flat_crosses(line, s) for s in fam.classes[k]):
            raise TheoremViolationError("stored line rejected")
        log.append("crossing line re-verified")
    elif command == "duality":
        h = hypergraph_from_doc(request["input"])
        tau_star_val = rat(results["tau_star"])
        weights = [rat(w) for w in results["tau_star_weights"]]
        for e in h.edges:
            if sum(weights[v] for v in e) < ONE:
                raise TheoremViolationError("stored tau* weights not a transversal")
        if sum(weights) != tau_star_val:
            raise TheoremViolationError("stored tau* value mismatch")
        log.append("fractional transversal certificate re-verified")
    return log


def _strip_volatile(results: dict) -> dict:
    return {k: v for k, v in results.items() if k != "wall_time_ms"}


def _cmd_recheck(request: dict, budget: SearchBudget) -> Outcome:
    report = request["input"]
    if not isinstance(report, dict) or "request" not in report:
        raise InputError("recheck expects a previously emitted report")
    stored_request = report["request"]
    if stored_request.get("command") == "recheck":
        raise InputError("rechecking a recheck report is not supported")
    if "input" in stored_request:
        stored_digest = report.get("input_digest")
        fresh = digest(stored_request["input"])
        if stored_digest != fresh:
            results = {
                "agrees": False,
                "reason": "input digest mismatch",
                "stored": stored_digest,
                "recomputed": fresh,
            }
            return Outcome(results, EXIT_REFUTED, ["digest mismatch"])
    log = _verify_report_certificates(report, budget)
    # drop side-effect-only fields so rechecking never writes files
    stored_request = {k: v for k, v in stored_request.items() if k != "svg"}
    rerun = _dispatch(stored_request, budget)
    stored_results = _strip_volatile(report.get("results", {}))
    fresh_results = json.loads(json.dumps(_strip_volatile(rerun.results)))
    agrees = (
        fresh_results == stored_results
        and rerun.exit_code == report.get("exit_code")
    )
    results = {
        "agrees": agrees,
        "command": stored_request.get("command"),
        "exit_code_stored": report.get("exit_code"),
        "exit_code_recomputed": rerun.exit_code,
    }
    if not agrees:
        results["recomputed_results"] = fresh_results
        return Outcome(results, EXIT_REFUTED, log + ["re-run disagreed with report"])
    log.append("re-run reproduced the stored results exactly")
    return Outcome(results, EXIT_OK, log)


# -- planar SVG (visual aid only) ----------------------------------------------


def _svg_coords(v) -> tuple[float, float]:
    return float(v[0]) * 40 + 40, 560 - float(v[1]) * 40


def _planar_svg(construction) -> str:
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
        'viewBox="0 0 600 600">'
    ]

    def polygon(vertices, stroke, fill="none", width=2):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(_svg_coords, vertices))
        parts.append(
            f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="{width}"/>'
        )

    polygon(construction.outer.vertices_hint, "#333333", width=3)
    palette = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")
    for i, tri in enumerate(construction.triangles):
        polygon(tri.vertices_hint, palette[i % len(palette)])
    for seg in construction.segments:
        (x1, y1), (x2, y2) = map(_svg_coords, seg.vertices_hint)
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="#555555" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


# -- dispatch and entry point ---------------------------------------------------


_HANDLERS = {
    "check-ch": _cmd_check_ch,
    "intersecting-class": _cmd_intersecting_class,
    "pierce": _cmd_pierce,
    "line-cover": _cmd_line_cover,
    "two-color": _cmd_two_color,
    "d2-dichotomy": _cmd_d2_dichotomy,
    "fractional-two-color": _cmd_fractional,
    "duality": _cmd_duality,
    "generate": _cmd_generate,
    "verify-lower-bound": _cmd_verify_lower_bound,
    "relint-check": _cmd_relint_check,
    "generic-line": _cmd_generic_line,
    "recheck": _cmd_recheck,
}


def _dispatch(request: dict, budget: SearchBudget) -> Outcome:
    command = request.get("command")
    handler = _HANDLERS.get(command)
    if handler is None:
        raise InputError(f"unknown command {command!r}")
    try:
        return handler(request, budget)
    except InputError as exc:
        return Outcome({"error": str(exc)}, EXIT_INPUT, [])
    except PreconditionError as exc:
        results = {"error": str(exc)}
        witness = _jsonable_witness(getattr(exc, "witness", None))
        if witness is not None:
            results["witness"] = witness
        return Outcome(results, EXIT_INPUT, [])
    except ScaleError as exc:
        results = {
            "error": str(exc),
            "budget": exc.budget_name,
            "limit": exc.limit,
            "actual": exc.actual,
        }
        return Outcome(results, EXIT_SCALE, [])
    except GenerationError as exc:
        results = {"error": str(exc)}
        witness = _jsonable_witness(getattr(exc, "witness", None))
        if witness is not None:
            results["witness"] = witness
        return Outcome(results, EXIT_SCALE, [])
    except TheoremViolationError as exc:
        return Outcome({"error": str(exc), "refuted": True}, EXIT_REFUTED, [])


def _render_pretty(report: dict) -> str:
    lines = [
        f"command      {report['command']}",
        f"exit code    {report['exit_code']}",
        f"wall time    {report['wall_time_ms']} ms",
    ]
    if "input_digest" in report:
        lines.append(f"input digest {report['input_digest'][:16]}...")

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(value, list) and len(value) > 6:
            lines.append(f"  {prefix[:-1]:<28} [{len(value)} entries]")
        else:
            lines.append(f"  {prefix[:-1]:<28} {value}")

    lines.append("results:")
    walk("", report["results"])
    for entry in report.get("verification", []):
        lines.append(f"  note: {entry}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument(
        "--pretty",
        action="store_true",
        help="indent the JSON report and print a summary table to stderr",
    )
    parser = argparse.ArgumentParser(
        prog="hellykit",
        description="exact transversal and colorful-Helly toolbox",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name: str, help_text: str):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--input", required=True, help="family JSON path or '-'")
        return p

    with_input("check-ch", "sweep all rainbow selections of a colored family")
    with_input("intersecting-class", "find a class with a common point (d+1 classes)")
    with_input("pierce", "exact piercing number of all sets in a document")
    with_input("line-cover", "exact line cover over the candidate pool")
    with_input("two-color", "piercing point or <= d crossing hyperplanes")
    with_input("d2-dichotomy", "planar dichotomy: one point or <= 4 lines")
    p = with_input("fractional-two-color", "fractional dichotomy with thresholds")
    p.add_argument("--alpha", required=True, help="meeting-pair fraction, e.g. 1/2")
    p = sub.add_parser("duality", parents=[common], help="nu_b/b <= nu* = tau* <= tau")
    p.add_argument("--input", required=True, help="hypergraph JSON path or '-'")
    p.add_argument("--b", type=int, default=1, help="matching multiplicity bound")
    p = sub.add_parser("generate", parents=[common], help="emit a named construction")
    p.add_argument("kind", choices=("figure1", "planar", "simplex"))
    p.add_argument("--d", type=int, help="ambient dimension")
    p.add_argument("--n", type=int, help="hyperplanes per class (figure1)")
    p.add_argument("--f", type=int, help="target piercing parameter (m = 2f)")
    p.add_argument("--svg", help="write an SVG rendering (planar only)")
    p = sub.add_parser(
        "verify-lower-bound",
        parents=[common],
        help="re-generate a construction and certify its claims",
    )
    p.add_argument("kind", choices=("figure1", "planar", "simplex"))
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--f", type=int)
    p = sub.add_parser(
        "relint-check",
        parents=[common],
        help="sweep colorful selections against facet relative interiors",
    )
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--f", type=int, default=1)
    with_input("generic-line", "one class crossed by a line via generic projection")
    with_input("recheck", "re-validate a previously emitted report")
    return parser


_GENERATOR_DEFAULTS = {"figure1": {"d": 2, "n": 1}, "planar": {"f": 1}, "simplex": {"d": 3, "f": 1}}


def _request_from_args(args: argparse.Namespace) -> dict:
    request: dict = {"command": args.command, "seed": args.seed}
    if args.command in ("generate", "verify-lower-bound"):
        request["kind"] = args.kind
        defaults = _GENERATOR_DEFAULTS[args.kind]
        for key in ("d", "n", "f"):
            value = getattr(args, key, None)
            if value is not None:
                request[key] = value
            elif key in defaults:
                request[key] = defaults[key]
        if args.command == "generate" and args.svg:
            request["svg"] = args.svg
        request["input"] = {
            k: v for k, v in request.items() if k in ("kind", "d", "n", "f", "seed")
        }
    elif args.command == "relint-check":
        request["d"] = args.d
        request["f"] = args.f
        request["input"] = {"kind": "simplex", "d": args.d, "f": args.f, "seed": args.seed}
    else:
        request["input"] = _read_json(args.input)
        if args.command == "fractional-two-color":
            request["alpha"] = args.alpha
        if args.command == "duality":
            request["b"] = args.b
    return request


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    budget = budget_from_env(os.environ)
    try:
        request = _request_from_args(args)
    except InputError as exc:
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "results": {"error": str(exc)},
            "verification": [],
            "exit_code": EXIT_INPUT,
            "wall_time_ms": 0,
        }
        print(json.dumps(report, indent=2 if args.pretty else None))
        return EXIT_INPUT
    started = time.monotonic()
    outcome = _dispatch(request, budget)
    wall_ms = int((time.monotonic() - started) * 1000)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": request["command"],
        "request": request,
        "input_digest": digest(request.get("input")),
        "seed": request.get("seed", 0),
        "budgets": dataclasses.asdict(budget),
        "results": outcome.results,
        "verification": outcome.log,
        "wall_time_ms": wall_ms,
        "exit_code": outcome.exit_code,
    }
    print(json.dumps(report, indent=2 if args.pretty else None))
    if args.pretty:
        print(_render_pretty(report), file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
