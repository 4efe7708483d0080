"""Colored-family dichotomies.

A d-colored family assigns each convex set one of several color classes.
The colorful Helly property (CH) asks that every rainbow selection, one set
per class, has a common point.  With d+1 classes in R^d, CH forces an entire
class to share a point; with fewer classes the conclusion degrades into
point-versus-flat dichotomies.  This module makes those statements
constructive at desk scale:

* check_ch enumerates rainbow selections and certifies the first failure;
* intersecting_class finds the promised class on (d+1)-colored CH input;
* two_color_lemma: when every A-member meets every B-member, either all of
  A shares a point, or the bounding hyperplanes of a separating-halfspace
  family (built from a minimal empty witness inside A) cross every B-member
  with at most d hyperplanes;
* theorem_main_d2 runs the two-colored step twice in the plane: one class
  is pierced by a single point, or at most four verified lines cross
  everything;
* generic_line_class projects d classes in R^d along a seeded direction and
  lifts the downstairs common point to a line crossing one class;
* fractional_two_color_search scans finite candidate pools for the point or
  hyperplane promised when only an alpha fraction of the pairs meet;
* dichotomy_report measures which class splits admit a (points, k-flats)
  transversal pair within stated budgets.

Every emitted transversal is re-verified exactly before it is returned.
Conclusions that are consequences of theorems are asserted: when such an
assertion fails the functions raise TheoremViolationError (a bug trap)
instead of returning a wrong answer.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .bounds import BoundFormulas, DEFAULT_FORMULAS
from .budgets import DEFAULT_BUDGET, SearchBudget
from .errors import (
    DimensionError,
    GenerationError,
    InputError,
    PreconditionError,
    ScaleError,
    TheoremViolationError,
)
from .geometry import (
    AffineFlat,
    FarkasEntry,
    Halfspace,
    Hyperplane,
    IntersectionCertificate,
    Point,
    Polyhedron,
    flat_crosses,
    hyperplane_crosses,
    hyperplane_to_flat,
    polyhedra_intersect,
)
from .hypergraphs import (
    TransversalResult,
    candidate_lines,
    candidate_planes,
    line_cover_number,
    maximal_intersecting_subfamilies,
    piercing_number,
    plane_cover_number,
)
from .lp import Feasible, Infeasible, LinearProgram, Optimal, Unbounded, lp_solve
from .projection import affine_project
from .rationals import ZERO, dot, is_zero_vec, rat, vec

__all__ = [
    "ColoredFamily",
    "ChReport",
    "PiercedClass",
    "LineCover",
    "HyperplaneCover",
    "Unresolved",
    "DichotomyOutcome",
    "SeparatingHalfspaces",
    "FractionalSearchReport",
    "DichotomyEntry",
    "DichotomyReport",
    "check_ch",
    "intersecting_class",
    "separating_halfspaces",
    "helly_witness",
    "two_color_lemma",
    "theorem_main_d2",
    "generic_line_class",
    "fractional_two_color_search",
    "dichotomy_report",
]


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class ColoredFamily:
    """Convex sets partitioned into color classes within one ambient space."""

    dim: int
    classes: tuple  # tuple of tuples of Polyhedron

    def __post_init__(self):
        classes = tuple(tuple(c) for c in self.classes)
        if not classes:
            raise InputError("a colored family needs at least one class")
        for k, cls in enumerate(classes):
            if not cls:
                raise InputError(f"color class {k} is empty")
            for s in cls:
                if not isinstance(s, Polyhedron):
                    raise InputError("class members must be polyhedra")
                if s.dim != self.dim:
                    raise DimensionError(
                        f"class {k} member has dimension {s.dim}, expected {self.dim}"
                    )
        object.__setattr__(self, "classes", classes)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def rainbow_count(self) -> int:
        return math.prod(len(c) for c in self.classes)

    def all_sets(self) -> list[Polyhedron]:
        return [s for cls in self.classes for s in cls]


@dataclass(frozen=True)
class ChReport:
    """Outcome of a full rainbow-selection sweep.

    holds = False cites the first failing selection as (class, set) index
    pairs together with the emptiness certificate of its joint system.
    """

    holds: bool
    violating_rainbow: Optional[tuple] = None
    certificate: Optional[IntersectionCertificate] = None
    checked: int = 0


@dataclass(frozen=True)
class PiercedClass:
    class_index: int
    points: tuple  # of Point


@dataclass(frozen=True)
class LineCover:
    lines: tuple  # of AffineFlat with k = 1


@dataclass(frozen=True)
class HyperplaneCover:
    """class_index names the crossed family (position in the input order)."""

    class_index: int
    hyperplanes: tuple


@dataclass(frozen=True)
class Unresolved:
    report: str


DichotomyOutcome = Union[PiercedClass, LineCover, HyperplaneCover, Unresolved]


@dataclass(frozen=True)
class SeparatingHalfspaces:
    """One halfspace per input set, jointly empty, with Farkas provenance.

    repaired lists the input positions whose aggregated normal vanished and
    whose halfspace therefore came from the set's own rows instead.
    """

    halfspaces: tuple
    farkas: tuple  # FarkasEntry list for the joint system
    repaired: tuple = ()


# ---------------------------------------------------------------------------
# CH verification and the (d+1)-colored consequence


def check_ch(fam: ColoredFamily, budget: SearchBudget = DEFAULT_BUDGET) -> ChReport:
    """Decide the colorful Helly property by exhaustive rainbow enumeration.

    Selections are visited in lexicographic index order, so the cited
    violation is deterministic.  Raises ScaleError when the number of
    selections exceeds the rainbow budget.
    """
    total = fam.rainbow_count
    if total > budget.max_rainbow_tuples:
        raise ScaleError("max_rainbow_tuples", budget.max_rainbow_tuples, total)
    checked = 0
    ranges = [range(len(c)) for c in fam.classes]
    for pick in itertools.product(*ranges):
        checked += 1
        sets = [fam.classes[k][i] for k, i in enumerate(pick)]
        cert = polyhedra_intersect(sets)
        if not cert.feasible:
            rainbow = tuple((k, i) for k, i in enumerate(pick))
            return ChReport(False, rainbow, cert, checked)
    return ChReport(True, None, None, checked)


def intersecting_class(
    fam: ColoredFamily,
    report: Optional[ChReport] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[int, Point]:
    """Find a class with a common point in a (d+1)-colored CH family.

    Existence is a theorem, so exhausting all classes without success raises
    TheoremViolationError.  The first intersecting class (lowest index) is
    returned with a verified common point.
    """
    if fam.num_classes != fam.dim + 1:
        raise PreconditionError(
            f"need dim+1 = {fam.dim + 1} classes, got {fam.num_classes}"
        )
    rep = report if report is not None else check_ch(fam, budget)
    if not rep.holds:
        raise PreconditionError(
            "family lacks the colorful Helly property",
            witness=rep.violating_rainbow,
        )
    for k, cls in enumerate(fam.classes):
        cert = polyhedra_intersect(cls)
        if cert.feasible:
            return k, cert.point
    raise TheoremViolationError(
        "CH holds with dim+1 classes but no class has a common point"
    )


# ---------------------------------------------------------------------------
# separating halfspaces and minimal empty witnesses


def _halfspace_contains_set(h: Halfspace, s: Polyhedron) -> bool:
    out = lp_solve(s.feasibility_lp(objective=h.normal, maximize=True))
    if isinstance(out, Optimal):
        return out.value <= h.offset
    return isinstance(out, Infeasible)  # empty sets sit inside everything


def _halfspaces_empty(dim: int, halfspaces: Sequence[Halfspace]) -> bool:
    rows = tuple((h.normal, h.offset) for h in halfspaces)
    return isinstance(lp_solve(LinearProgram(dim, leq=rows)), Infeasible)


def _own_row_halfspace(s: Polyhedron) -> Halfspace:
    if s.inequalities:
        return s.inequalities[0]
    h = s.equalities[0]
    return Halfspace(h.normal, h.offset)


def _repair_halfspace(s: Polyhedron, others: Sequence[Halfspace]) -> Halfspace:
    """Halfspace containing s, disjoint from the (provably empty) rest.

    A separation attempt against the other aggregates runs first; when its
    certificate puts no weight on the rows of s (which happens exactly when
    the other aggregates are contradictory on their own), any row of s works.
    """
    d = s.dim
    leq = [(h.normal, h.offset) for h in s.inequalities]
    n_own = len(leq)
    leq += [(h.normal, h.offset) for h in others]
    eq = [(h.normal, h.offset) for h in s.equalities]
    out = lp_solve(LinearProgram(d, leq=tuple(leq), eq=tuple(eq)))
    if isinstance(out, Infeasible):
        normal = [ZERO] * d
        offset = ZERO
        for mult, (coeffs, rhs) in zip(out.leq_multipliers[:n_own], leq[:n_own]):
            if mult:
                for i, a in enumerate(coeffs):
                    normal[i] += mult * a
                offset += mult * rhs
        for mult, (coeffs, rhs) in zip(out.eq_multipliers, eq):
            if mult:
                for i, a in enumerate(coeffs):
                    normal[i] += mult * a
                offset += mult * rhs
        if not is_zero_vec(normal):
            return Halfspace(tuple(normal), offset)
    return _own_row_halfspace(s)


def separating_halfspaces(sets: Sequence[Polyhedron]) -> SeparatingHalfspaces:
    """Halfspaces H_i containing the respective sets with empty intersection.

    Groups the Farkas multipliers of the joint infeasible system by the
    originating set; each group aggregates to one halfspace containing its
    set, and the aggregates sum to an absurd constraint, so their
    intersection is empty.  Groups whose normal cancels to zero are repaired
    from the set's own rows.  Both postconditions are re-verified by LP
    before returning.
    """
    sets = list(sets)
    if not sets:
        raise InputError("need at least one set")
    d = sets[0].dim
    for i, s in enumerate(sets):
        if not (s.inequalities or s.equalities):
            raise InputError(
                f"set {i} is the whole space; no halfspace can contain it"
            )
        if s.is_empty():
            raise InputError(f"set {i} is empty; separation needs nonempty sets")
    cert = polyhedra_intersect(sets)
    if cert.feasible:
        raise PreconditionError(
            "the sets share a point", witness=cert.point
        )
    entries = list(cert.farkas)
    constant = sum(
        (e.multiplier * _entry_row(sets, e).offset for e in entries), ZERO
    )
    if constant > 0:
        # pure-equality contradictions may aggregate to 0 = c with c > 0;
        # equality multipliers are sign-free, so negate the certificate
        if any(e.kind != "eq" for e in entries):
            raise TheoremViolationError("positive constant with inequality rows")
        entries = [
            FarkasEntry(e.set_index, e.kind, e.row_index, -e.multiplier)
            for e in entries
        ]
    groups = {}
    for e in entries:
        row = _entry_row(sets, e)
        normal, offset = groups.setdefault(e.set_index, ([ZERO] * d, [ZERO]))
        for i, a in enumerate(row.normal):
            normal[i] += e.multiplier * a
        offset[0] += e.multiplier * row.offset
    halfspaces: list = [None] * len(sets)
    repaired = []
    for i in range(len(sets)):
        normal, offset = groups.get(i, ([ZERO] * d, [ZERO]))
        if is_zero_vec(normal):
            if offset[0] < 0:
                raise TheoremViolationError(
                    f"nonempty set {i} received a self-contradictory aggregate"
                )
            repaired.append(i)
        else:
            halfspaces[i] = Halfspace(tuple(normal), offset[0])
    for i in repaired:
        others = [h for h in halfspaces if h is not None]
        halfspaces[i] = _repair_halfspace(sets[i], others)
    for i, (h, s) in enumerate(zip(halfspaces, sets)):
        if not _halfspace_contains_set(h, s):
            raise TheoremViolationError(f"halfspace {i} fails to contain its set")
    if not _halfspaces_empty(d, halfspaces):
        raise TheoremViolationError("separating halfspaces still intersect")
    return SeparatingHalfspaces(tuple(halfspaces), tuple(entries), tuple(repaired))


def _entry_row(sets: Sequence[Polyhedron], e: FarkasEntry):
    s = sets[e.set_index]
    return s.inequalities[e.row_index] if e.kind == "ineq" else s.equalities[e.row_index]


def helly_witness(sets: Sequence[Polyhedron]) -> list[int]:
    """Indices of an inclusion-minimal empty-intersection subfamily.

    Scans removal candidates from the highest index down, so the result is
    biased toward keeping early sets and is deterministic.  Minimality under
    single removal bounds the size by dim+1: were the witness larger, every
    (dim+1)-subfamily would sit inside some intersecting single-removal
    subfamily, and the Helly theorem would make the whole witness intersect.
    """
    sets = list(sets)
    cert = polyhedra_intersect(sets)
    if cert.feasible:
        raise PreconditionError("the sets share a point", witness=cert.point)
    keep = list(range(len(sets)))
    for idx in range(len(sets) - 1, -1, -1):
        if len(keep) == 1:
            break
        trial = [t for t in keep if t != idx]
        if not polyhedra_intersect([sets[t] for t in trial]).feasible:
            keep = trial
    if len(keep) > sets[0].dim + 1:
        raise TheoremViolationError(
            f"minimal empty witness has size {len(keep)} > dim+1"
        )
    return keep


# ---------------------------------------------------------------------------
# the two-colored dichotomy and its planar consequence


def two_color_lemma(
    a_sets: Sequence[Polyhedron],
    b_sets: Sequence[Polyhedron],
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    pairs_checked: bool = False,
) -> DichotomyOutcome:
    """Point in all of A, or at most d hyperplanes crossing every B.

    Requires every A-member to meet every B-member (verified pairwise unless
    the caller vouches via pairs_checked).  When A has no common point, a
    minimal empty witness inside A yields separating halfspaces; every
    B-member meets each witness set, so it cannot avoid the boundaries of
    the first w-1 halfspaces without landing in their empty intersection.
    The returned cover is verified set by set.
    """
    a_sets, b_sets = list(a_sets), list(b_sets)
    if not a_sets:
        raise InputError("class A is empty")
    d = a_sets[0].dim
    if not pairs_checked:
        pair_total = len(a_sets) * len(b_sets)
        if pair_total > budget.max_rainbow_tuples:
            raise ScaleError("max_rainbow_tuples", budget.max_rainbow_tuples, pair_total)
        for (i, a), (j, b) in itertools.product(
            enumerate(a_sets), enumerate(b_sets)
        ):
            if not polyhedra_intersect([a, b]).feasible:
                raise PreconditionError(
                    f"sets A[{i}] and B[{j}] do not meet", witness=(i, j)
                )
    cert = polyhedra_intersect(a_sets)
    if cert.feasible:
        return PiercedClass(0, (cert.point,))
    witness = helly_witness(a_sets)
    sep = separating_halfspaces([a_sets[i] for i in witness])
    bounding = [
        Hyperplane(h.normal, h.offset) for h in sep.halfspaces[: len(witness) - 1]
    ]
    hyperplanes = tuple(dict.fromkeys(bounding))
    if len(hyperplanes) > d:
        raise TheoremViolationError("more than d bounding hyperplanes emitted")
    for j, b in enumerate(b_sets):
        if not any(hyperplane_crosses(h, b) for h in hyperplanes):
            raise TheoremViolationError(
                f"B[{j}] avoids every bounding hyperplane of the witness"
            )
    return HyperplaneCover(1, hyperplanes)


def theorem_main_d2(
    fam: ColoredFamily, budget: SearchBudget = DEFAULT_BUDGET
) -> DichotomyOutcome:
    """Planar 2-colored dichotomy: one piercing point, or at most 4 lines.

    Runs the two-colored step in both role orders.  If neither class has a
    common point, each application contributes at most two bounding lines
    (crossing the opposite class), and their union crosses every set of the
    family.  The cover is re-verified before emission.
    """
    if fam.dim != 2 or fam.num_classes != 2:
        raise PreconditionError("expected two classes in the plane")
    rep = check_ch(fam, budget)
    if not rep.holds:
        raise PreconditionError(
            "some pair of differently colored sets is disjoint",
            witness=rep.violating_rainbow,
        )
    first, second = fam.classes
    out_a = two_color_lemma(first, second, budget, pairs_checked=True)
    if isinstance(out_a, PiercedClass):
        return PiercedClass(0, out_a.points)
    out_b = two_color_lemma(second, first, budget, pairs_checked=True)
    if isinstance(out_b, PiercedClass):
        return PiercedClass(1, out_b.points)
    hyperplanes = tuple(dict.fromkeys(out_a.hyperplanes + out_b.hyperplanes))
    lines = tuple(hyperplane_to_flat(h) for h in hyperplanes)
    if len(lines) > 4:
        raise TheoremViolationError("planar dichotomy emitted more than 4 lines")
    for k, cls in enumerate(fam.classes):
        for i, s in enumerate(cls):
            if not any(flat_crosses(line, s) for line in lines):
                raise TheoremViolationError(
                    f"set {i} of class {k} avoids the whole line cover"
                )
    return LineCover(lines)


# ---------------------------------------------------------------------------
# projection-based single-line finder


def generic_line_class(
    fam: ColoredFamily,
    seed: int = 0,
    max_retries: int = 32,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[int, AffineFlat]:
    """One class of a d-colored CH family in R^d crossed by a single line.

    Projecting along any direction keeps CH (shadows of common points are
    common points), so the (d-1)-dimensional image with d classes has an
    intersecting class; the fiber line over its common point crosses the
    corresponding class upstairs.  Directions come from a seeded integer
    grid; each candidate conclusion is checked rather than trusted, and a
    direction is abandoned on any check failure.
    """
    if fam.num_classes != fam.dim:
        raise PreconditionError(
            f"need exactly dim = {fam.dim} classes, got {fam.num_classes}"
        )
    if fam.dim < 2:
        raise DimensionError("need ambient dimension at least 2")
    rep = check_ch(fam, budget)
    if not rep.holds:
        raise PreconditionError(
            "family lacks the colorful Helly property",
            witness=rep.violating_rainbow,
        )
    rng = random.Random(seed)
    failures = []
    for _ in range(max_retries):
        nu = tuple(rng.randint(-9, 9) for _ in range(fam.dim))
        while is_zero_vec(nu):
            nu = tuple(rng.randint(-9, 9) for _ in range(fam.dim))
        down = ColoredFamily(
            fam.dim - 1,
            tuple(tuple(affine_project(cls, nu)) for cls in fam.classes),
        )
        try:
            down_rep = check_ch(down, budget)
            if not down_rep.holds:
                failures.append((nu, "projected family lost CH"))
                continue
            idx, shadow = intersecting_class(down, down_rep, budget)
        except TheoremViolationError as exc:
            failures.append((nu, str(exc)))
            continue
        j = max(i for i in range(fam.dim) if nu[i] != 0)
        base = list(shadow.coords)
        base.insert(j, ZERO)
        line = AffineFlat.line(tuple(base), vec(nu))
        if all(flat_crosses(line, s) for s in fam.classes[idx]):
            return idx, line
        failures.append((nu, f"lifted line misses class {idx}"))
    raise GenerationError(
        f"no workable direction after {max_retries} draws: "
        + "; ".join(f"{nu} ({why})" for nu, why in failures),
        witness=failures,
    )


# ---------------------------------------------------------------------------
# fractional two-colored search


@dataclass(frozen=True)
class FractionalSearchReport:
    """Best single point over A and best single hyperplane over B.

    Coverage targets are gamma*|A| and lambda*|B|; `holds` states that at
    least one target is met, which is guaranteed whenever the meeting-pair
    fraction is at least alpha.  beta_label records which fractional-Helly
    bound produced gamma.
    """

    dim: int
    alpha: object
    pair_count: int
    pair_target: object
    gamma_value: object
    lambda_value: object
    gamma_target: object
    lambda_target: object
    best_point: Optional[Point]
    point_covered: tuple
    best_hyperplane: Optional[Hyperplane]
    hyperplane_covered: tuple
    holds: bool
    beta_label: str


def _line_to_hyperplane(line: AffineFlat) -> Hyperplane:
    (dx, dy), = line.directions
    normal = (-dy, dx)
    return Hyperplane(normal, dot(normal, line.base))


def fractional_two_color_search(
    a_sets: Sequence[Polyhedron],
    b_sets: Sequence[Polyhedron],
    alpha,
    formulas: BoundFormulas = DEFAULT_FORMULAS,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> FractionalSearchReport:
    """Search the promised point/hyperplane dichotomy at fraction alpha.

    Requires at least alpha*|A|*|B| meeting pairs (counted exactly).  The
    point candidates are the witness points of maximal intersecting
    subfamilies of A; hyperplane candidates pass through vertices of the
    input sets (lines in the plane, planes in R^3).  Failing both coverage
    targets contradicts the dichotomy, so it raises TheoremViolationError.
    """
    a_sets, b_sets = list(a_sets), list(b_sets)
    if not a_sets or not b_sets:
        raise InputError("both families must be nonempty")
    d = a_sets[0].dim
    if d not in (2, 3):
        raise InputError("hyperplane candidates exist for dimensions 2 and 3 only")
    alpha = rat(alpha)
    if not (ZERO < alpha <= 1):
        raise InputError("alpha must satisfy 0 < alpha <= 1")
    pair_total = len(a_sets) * len(b_sets)
    if pair_total > budget.max_rainbow_tuples:
        raise ScaleError("max_rainbow_tuples", budget.max_rainbow_tuples, pair_total)
    pair_count = sum(
        1
        for a, b in itertools.product(a_sets, b_sets)
        if polyhedra_intersect([a, b]).feasible
    )
    pair_target = alpha * pair_total
    if pair_count < pair_target:
        raise PreconditionError(
            f"only {pair_count} of {pair_total} pairs meet, below the "
            f"required fraction",
            witness=pair_count,
        )
    gamma_value = formulas.gamma(alpha, d)
    lambda_value = formulas.lam(alpha, d)
    gamma_target = gamma_value * len(a_sets)
    lambda_target = lambda_value * len(b_sets)

    live_a = [i for i, s in enumerate(a_sets) if s.feasible_point() is not None]
    best_point, point_covered = None, ()
    if live_a:
        subfamilies, witnesses = maximal_intersecting_subfamilies(
            [a_sets[i] for i in live_a], budget
        )
        for sub, pt in zip(subfamilies, witnesses):
            covered = tuple(sorted(live_a[i] for i in sub))
            if len(covered) > len(point_covered):
                best_point, point_covered = pt, covered

    live_sets = [s for s in a_sets + b_sets if s.feasible_point() is not None]
    best_hyperplane, hyperplane_covered = None, ()
    if live_sets:
        if d == 2:
            candidates = [_line_to_hyperplane(l) for l in candidate_lines(live_sets)]
        else:
            candidates = candidate_planes(live_sets)
        for h in candidates:
            covered = tuple(
                j for j, b in enumerate(b_sets) if hyperplane_crosses(h, b)
            )
            if len(covered) > len(hyperplane_covered):
                best_hyperplane, hyperplane_covered = h, covered

    holds = (
        rat(len(point_covered)) >= gamma_target
        or rat(len(hyperplane_covered)) >= lambda_target
    )
    if not holds:
        raise TheoremViolationError(
            "neither coverage target was met despite the meeting-pair fraction"
        )
    return FractionalSearchReport(
        dim=d,
        alpha=alpha,
        pair_count=pair_count,
        pair_target=pair_target,
        gamma_value=gamma_value,
        lambda_value=lambda_value,
        gamma_target=gamma_target,
        lambda_target=lambda_target,
        best_point=best_point,
        point_covered=point_covered,
        best_hyperplane=best_hyperplane,
        hyperplane_covered=hyperplane_covered,
        holds=holds,
        beta_label=formulas.beta_label,
    )


# ---------------------------------------------------------------------------
# split probes


@dataclass(frozen=True)
class DichotomyEntry:
    """One (k, class subset) probe: pierce the subset, cross the rest."""

    k: int
    pierced_classes: tuple
    pierce: TransversalResult
    cover: Optional[TransversalResult]
    cover_kind: Optional[str]  # "line", "plane", or "space"
    within_budgets: bool


@dataclass(frozen=True)
class DichotomyReport:
    dim: int
    f_budget: int
    g_budget: int
    entries: tuple

    @property
    def successful(self) -> tuple:
        return tuple(e for e in self.entries if e.within_budgets)


def dichotomy_report(
    fam: ColoredFamily,
    f_budget: int,
    g_budget: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> DichotomyReport:
    """Exact piercing/cover numbers for every split of the color classes.

    For each k and each k-subset of classes, the subset union is pierced
    exactly; when the piercing count stays within f_budget, the remaining
    classes are covered by k-flats (lines for k = 1, planes for k = 2 in
    R^3, the whole space when k equals the dimension).  Suffix covers are
    skipped (cover = None) once the point side already exceeds its budget.
    """
    if fam.dim > 3:
        raise InputError("split probes cover dimensions up to 3")
    if f_budget < 0 or g_budget < 0:
        raise InputError("budgets must be nonnegative")
    entries = []
    for k in range(1, fam.dim + 1):
        for subset in itertools.combinations(range(fam.num_classes), k):
            prefix = [s for i in subset for s in fam.classes[i]]
            suffix = [
                s
                for i in range(fam.num_classes)
                if i not in subset
                for s in fam.classes[i]
            ]
            pierce = piercing_number(prefix, budget)
            if pierce.size > f_budget:
                entries.append(
                    DichotomyEntry(k, subset, pierce, None, None, False)
                )
                continue
            if not suffix:
                cover = TransversalResult(0, ())
                kind = "space" if k == fam.dim else ("line" if k == 1 else "plane")
            elif k == fam.dim:
                cover = TransversalResult(1, ())
                kind = "space"
            elif k == 1:
                cover = line_cover_number(suffix, budget)
                kind = "line"
            else:  # k == 2 in R^3
                cover = plane_cover_number(suffix, budget)
                kind = "plane"
            entries.append(
                DichotomyEntry(
                    k, subset, pierce, cover, kind, cover.size <= g_budget
                )
            )
    return DichotomyReport(fam.dim, f_budget, g_budget, tuple(entries))
